//! JSON persistence. Every file is a `Document` envelope: schema version,
//! leaper metadata, a kind tag, and the payload for that kind. Loading
//! re-validates the payload against its invariants, so a file that parses
//! but breaks an invariant is rejected as malformed.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use chord_lab::{Basis, Figure, ForkCertificate};
use extremal_search::{HalfFreeDiagnostic, SearchResult};
use leaper_core::{GridEmbedding, IntVec, Leaper, LeaperPath};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub p: i64,
    pub q: i64,
    pub tool_version: String,
    #[serde(default)]
    pub params: Value,
}

impl Meta {
    pub fn new(p: i64, q: i64, params: Value) -> Meta {
        Meta {
            p,
            q,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            params,
        }
    }

    pub fn leaper(&self) -> Leaper {
        Leaper::classify(self.p, self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathPayload {
    pub vertices: Vec<IntVec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairPayload {
    pub alpha: Vec<IntVec>,
    pub beta: Vec<IntVec>,
    pub m: i64,
    pub n: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingPayload {
    pub m: usize,
    pub n: i64,
    /// Row-major: rows[i][j] is the image of grid vertex (i, j).
    pub rows: Vec<Vec<IntVec>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificatePayload {
    pub figure: Vec<IntVec>,
    pub u1: IntVec,
    pub u2: IntVec,
    pub certificate: ForkCertificate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchTablePayload {
    pub rows: Vec<SearchResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum Body {
    Path(PathPayload),
    Pair(PairPayload),
    Embedding(EmbeddingPayload),
    Certificate(CertificatePayload),
    SearchTable(SearchTablePayload),
    Diagnostic(HalfFreeDiagnostic),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: u32,
    pub meta: Meta,
    #[serde(flatten)]
    pub body: Body,
}

impl Document {
    pub fn new(meta: Meta, body: Body) -> Document {
        Document {
            schema_version: SCHEMA_VERSION,
            meta,
            body,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.body {
            Body::Path(_) => "path",
            Body::Pair(_) => "pair",
            Body::Embedding(_) => "embedding",
            Body::Certificate(_) => "certificate",
            Body::SearchTable(_) => "search_table",
            Body::Diagnostic(_) => "diagnostic",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Parses and validates. Any schema or invariant failure is an error.
    pub fn from_json(text: &str) -> Result<Document, String> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| format!("invalid document JSON: {e}"))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(format!(
                "unsupported schema_version {}",
                doc.schema_version
            ));
        }
        doc.validate()?;
        Ok(doc)
    }

    pub fn validate(&self) -> Result<(), String> {
        let leaper = self.meta.leaper();
        match &self.body {
            Body::Path(p) => {
                LeaperPath::new(p.vertices.clone(), &leaper).map_err(|e| e.to_string())?;
            }
            Body::Pair(p) => {
                let alpha =
                    LeaperPath::new(p.alpha.clone(), &leaper).map_err(|e| e.to_string())?;
                let beta = LeaperPath::new(p.beta.clone(), &leaper).map_err(|e| e.to_string())?;
                if alpha.len() as i64 != p.m || beta.len() as i64 != p.m {
                    return Err(format!(
                        "pair claims m = {} but paths have {} and {} vertices",
                        p.m,
                        alpha.len(),
                        beta.len()
                    ));
                }
            }
            Body::Embedding(e) => {
                let embedding = embedding_from_payload(e)?;
                embedding.validate_leaps(&leaper).map_err(|e| e.to_string())?;
            }
            Body::Certificate(c) => {
                let figure = Figure::new(c.figure.iter().copied()).map_err(|e| e.to_string())?;
                c.certificate
                    .validate(&figure)
                    .map_err(|e| format!("certificate does not audit: {e}"))?;
            }
            Body::SearchTable(t) => {
                for row in &t.rows {
                    if let Some((a, b)) = &row.witness {
                        let report =
                            leaper_core::check_pair(a, b, row.n).map_err(|e| e.to_string())?;
                        if !report.is_valid() || a.len() != row.m_star {
                            return Err(format!(
                                "search row n = {} carries a witness that does not verify",
                                row.n
                            ));
                        }
                    }
                }
            }
            Body::Diagnostic(_) => {}
        }
        Ok(())
    }
}

pub fn path_payload(path: &LeaperPath) -> PathPayload {
    PathPayload {
        vertices: path.vertices().to_vec(),
    }
}

pub fn pair_payload(alpha: &LeaperPath, beta: &LeaperPath, m: i64, n: i64) -> PairPayload {
    PairPayload {
        alpha: alpha.vertices().to_vec(),
        beta: beta.vertices().to_vec(),
        m,
        n,
    }
}

pub fn embedding_payload(e: &GridEmbedding, n: i64) -> EmbeddingPayload {
    let m = e.m();
    let rows = (0..m)
        .map(|i| (0..m).map(|j| e.point(i, j)).collect())
        .collect();
    EmbeddingPayload { m, n, rows }
}

pub fn embedding_from_payload(p: &EmbeddingPayload) -> Result<GridEmbedding, String> {
    let mut points = Vec::with_capacity(p.m * p.m);
    if p.rows.len() != p.m {
        return Err(format!("embedding has {} rows, expected {}", p.rows.len(), p.m));
    }
    for row in &p.rows {
        if row.len() != p.m {
            return Err(format!("embedding row has {} entries, expected {}", row.len(), p.m));
        }
        points.extend_from_slice(row);
    }
    GridEmbedding::new(p.m, points).map_err(|e| e.to_string())
}

pub fn certificate_payload(
    figure: &Figure,
    _basis: &Basis,
    u1: IntVec,
    u2: IntVec,
    certificate: ForkCertificate,
) -> CertificatePayload {
    CertificatePayload {
        figure: figure.cells().collect(),
        u1,
        u2,
        certificate,
    }
}
