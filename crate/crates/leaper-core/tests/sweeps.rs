//! Sweeps over small free and half-free leapers: every generated pair must
//! pass verification at the formula board size, and the structural claims
//! about which differences each path avoids must hold.

use leaper_core::{
    check_pair, factor, free_construction, halffree_construction, product, verify_embedding,
    IntVec, Leaper,
};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn free_sweep_domain() -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in [1i64, 3, 5, 7, 9] {
        for q in [2i64, 4, 6, 8] {
            if gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

fn halffree_sweep_domain() -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in [1i64, 3, 5, 7, 9] {
        for q in [1i64, 3, 5, 7, 9] {
            if p < q && gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

#[test]
fn free_sweep_passes_and_avoids_overlaps() {
    for (p, q) in free_sweep_domain() {
        let leaper = Leaper::classify(p, q);
        for k in 1..=4 {
            let c = free_construction(&leaper, k).unwrap();
            assert_eq!(c.m, 4 * k * p + 1, "({p},{q}) k={k}");
            assert_eq!(c.n, 4 * k * p + 2 * p * q + 1);
            let r = check_pair(&c.alpha, &c.beta, c.n).unwrap();
            assert!(r.is_valid(), "({p},{q}) k={k}: {r:?}");

            // The only candidate common differences are (0, +-2pq),
            // (+-2pq, 0) and (+-2pq, +-2pq). Alpha avoids the vertical and
            // diagonal ones, beta the horizontal and diagonal ones.
            let t = 2 * p * q;
            let da = c.alpha.difference_set();
            let db = c.beta.difference_set();
            assert!(!da.contains(IntVec::new(0, t)) && !da.contains(IntVec::new(0, -t)));
            assert!(!db.contains(IntVec::new(t, 0)) && !db.contains(IntVec::new(-t, 0)));
            for sx in [-1, 1] {
                for sy in [-1, 1] {
                    let v = IntVec::new(sx * t, sy * t);
                    assert!(!da.contains(v), "alpha realizes {v} for ({p},{q}) k={k}");
                    assert!(!db.contains(v), "beta realizes {v} for ({p},{q}) k={k}");
                }
            }

            // Differences of alpha reaching full height 2pq have x-multiple
            // congruent to 2 mod 4.
            for d in da.iter() {
                if d.y.abs() == t {
                    assert_eq!(d.x % p, 0);
                    assert_eq!((d.x / p).rem_euclid(4), 2, "({p},{q}) k={k} diff {d}");
                }
            }
        }
    }
}

#[test]
fn halffree_sweep_passes_and_avoids_common_overlaps() {
    for (p, q) in halffree_sweep_domain() {
        let leaper = Leaper::classify(p, q);
        for k in 1..=4 {
            let c = halffree_construction(&leaper, k).unwrap();
            assert_eq!(c.m, 2 * k * c.oriented_p + 1);
            assert_eq!(c.n, 4 * k * c.oriented_p + p * q + 1);
            let r = check_pair(&c.alpha, &c.beta, c.n).unwrap();
            assert!(r.is_valid(), "({p},{q}) k={k}: {r:?}");

            // The candidate common differences (+-pq, +-pq) split between the
            // paths: each is avoided by at least one of alpha, beta.
            let t = p * q;
            let da = c.alpha.difference_set();
            let db = c.beta.difference_set();
            for sx in [-1, 1] {
                for sy in [-1, 1] {
                    let v = IntVec::new(sx * t, sy * t);
                    assert!(
                        !(da.contains(v) && db.contains(v)),
                        "({p},{q}) k={k}: {v} is a common difference"
                    );
                }
            }

            // Differences of alpha at height +pq have x-multiple congruent
            // to 3 mod 4 (in the swapped orientation).
            let (op, oq) = (c.oriented_p, c.oriented_q);
            for d in da.iter() {
                if d.y == op * oq {
                    assert_eq!(d.x % op, 0);
                    assert_eq!((d.x / op).rem_euclid(4), 3, "({p},{q}) k={k} diff {d}");
                }
            }
        }
    }
}

#[test]
fn construction_products_verify_and_round_trip() {
    for (p, q, k) in [(3i64, 2i64, 3i64), (1, 2, 2), (1, 4, 1)] {
        let leaper = Leaper::classify(p, q);
        let c = free_construction(&leaper, k).unwrap();
        let e = product(&c.alpha, &c.beta).unwrap();
        assert!(verify_embedding(&e, &leaper, c.n));
        assert!(!verify_embedding(&e, &leaper, c.n - 1));
        let b = e.bounding_box();
        assert_eq!(b.width(), c.n);
        assert_eq!(b.height(), c.n);
        let (fa, fb) = factor(&e).unwrap();
        assert_eq!(product(&fa, &fb).unwrap(), e);
    }
    for (p, q, k) in [(1i64, 3i64, 2i64), (3, 5, 1), (5, 9, 1)] {
        let leaper = Leaper::classify(p, q);
        let c = halffree_construction(&leaper, k).unwrap();
        let e = product(&c.alpha, &c.beta).unwrap();
        assert!(verify_embedding(&e, &leaper, c.n));
        let (fa, fb) = factor(&e).unwrap();
        assert_eq!(product(&fa, &fb).unwrap(), e);
    }
}

#[test]
fn zebra_k3_embedding_box_is_49() {
    let zebra = Leaper::classify(3, 2);
    let c = free_construction(&zebra, 3).unwrap();
    let e = product(&c.alpha, &c.beta).unwrap();
    assert_eq!(e.m(), 37);
    let b = e.bounding_box();
    assert_eq!((b.width(), b.height()), (49, 49));
    assert!(verify_embedding(&e, &zebra, 49));
    assert!(!verify_embedding(&e, &zebra, 36));
}
