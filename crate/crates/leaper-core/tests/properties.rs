use leaper_core::{check_pair, difference_set, factor, product, IntVec, Leaper, LeaperPath};
use proptest::prelude::*;

fn knight() -> Leaper {
    Leaper::classify(1, 2)
}

/// Random self-avoiding knight walk, as a move-index sequence.
fn walk_strategy(max_moves: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..8, 1..=max_moves)
}

fn walk_to_path(indices: &[usize]) -> Option<LeaperPath> {
    let knight = knight();
    let dirs = knight.directions();
    let moves: Vec<IntVec> = indices.iter().map(|&i| dirs[i]).collect();
    LeaperPath::from_moves(IntVec::ZERO, &moves, &knight).ok()
}

proptest! {
    #[test]
    fn rotate90_is_order_four_and_preserves_diffs(idx in walk_strategy(12)) {
        prop_assume!(walk_to_path(&idx).is_some());
        let p = walk_to_path(&idx).unwrap();
        let r = p.rotate90();
        prop_assert_eq!(r.rotate90().rotate90().rotate90(), p.clone());
        prop_assert_eq!(r.difference_set().len(), p.difference_set().len());
        for d in p.difference_set().iter() {
            prop_assert!(r.difference_set().contains(d.rot90()));
        }
    }

    #[test]
    fn product_factor_round_trip(ia in walk_strategy(6), ib in walk_strategy(6)) {
        let (a, b) = match (walk_to_path(&ia), walk_to_path(&ib)) {
            (Some(a), Some(b)) if a.len() == b.len() => (a, b),
            _ => return Ok(()),
        };
        let a = a.translate(IntVec::new(3, -2));
        if let Ok(e) = product(&a, &b) {
            let (fa, fb) = factor(&e).unwrap();
            // Factorization is normalized: alpha starts at the origin.
            prop_assert_eq!(fa.first(), IntVec::ZERO);
            prop_assert_eq!(product(&fa, &fb).unwrap(), e);
            let shift = a.first();
            let a_norm = a.translate(-shift);
            let b_norm = b.translate(shift);
            prop_assert_eq!(fa.vertices(), a_norm.vertices());
            prop_assert_eq!(fb.vertices(), b_norm.vertices());
        }
    }

    #[test]
    fn difference_set_closed_under_negation(idx in walk_strategy(10)) {
        prop_assume!(walk_to_path(&idx).is_some());
        let p = walk_to_path(&idx).unwrap();
        let d = difference_set(p.vertices());
        for v in d.iter() {
            prop_assert!(!v.is_zero());
            prop_assert!(d.contains(-v));
        }
    }

    #[test]
    fn check_pair_translation_invariant(
        ia in walk_strategy(5),
        ib in walk_strategy(5),
        dx in -20i64..20,
        dy in -20i64..20,
        n in 1i64..40,
    ) {
        let (a, b) = match (walk_to_path(&ia), walk_to_path(&ib)) {
            (Some(a), Some(b)) if a.len() == b.len() => (a, b),
            _ => return Ok(()),
        };
        let r1 = check_pair(&a, &b, n).unwrap();
        let r2 = check_pair(&a.translate(IntVec::new(dx, dy)), &b, n).unwrap();
        prop_assert_eq!(r1.disjoint, r2.disjoint);
        prop_assert_eq!(r1.box_ok, r2.box_ok);
        prop_assert_eq!(r1.min_n, r2.min_n);
    }
}

#[test]
fn straight_segment_difference_set_is_progression() {
    let cells: Vec<IntVec> = (0..5).map(|k| IntVec::new(k, 0)).collect();
    let d = difference_set(&cells);
    for k in 1..5 {
        assert!(d.contains(IntVec::new(k, 0)));
        assert!(d.contains(IntVec::new(-k, 0)));
    }
    assert_eq!(d.len(), 8);
}
