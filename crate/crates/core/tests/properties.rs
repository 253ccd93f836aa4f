//! Randomised invariants on shapes larger than the exhaustive suite reaches.

use proptest::prelude::*;

use rigged::bijection::{phi, phi_inv, phi_recursive, psi};
use rigged::paths::Path;
use rigged::promotion::{pr, pr_bar, rs};
use rigged::young::{insert, Tableau};

/// A rectangular tableau with entries in `1..=max`, filled greedily from
/// random increments so every cell stays inside its feasible range.
fn tableau(height: usize, width: usize, max: u32) -> impl Strategy<Value = Tableau> {
    prop::collection::vec(0u32..3, height * width).prop_map(move |inc| {
        let mut rows = vec![vec![0u32; width]; height];
        for i in 0..height {
            let upper = max - (height - 1 - i) as u32;
            for j in 0..width {
                let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
                let left = if j > 0 { rows[i][j - 1] } else { 1 };
                let lower = above.max(left);
                rows[i][j] = (lower + inc[i * width + j]).min(upper);
            }
        }
        Tableau::new(rows).expect("greedy filling is semistandard")
    })
}

fn path_strategy() -> impl Strategy<Value = Path> {
    (2usize..=5).prop_flat_map(|n| {
        let rect = (1..=n, 1usize..=3);
        prop::collection::vec(rect, 1..=3).prop_flat_map(move |rects| {
            let factors: Vec<_> = rects.iter().map(|&(h, w)| tableau(h, w, n as u32 + 1)).collect();
            factors.prop_map(move |ts| Path::new(n, ts).expect("factors fit the rank"))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn phi_is_invertible(p in path_strategy()) {
        let rc = phi(&p);
        prop_assert_eq!(phi_inv(&rc).unwrap(), p.clone());
        prop_assert_eq!(phi_recursive(&p), rc.clone());
        prop_assert_eq!(rc.weight(), p.weight());
        rc.check_labels().unwrap();
    }

    #[test]
    fn phi_intertwines_promotion(p in path_strategy()) {
        let lhs = phi(&pr(&p).unwrap());
        prop_assert_eq!(pr_bar(&phi(&p)).unwrap(), lhs);
    }

    #[test]
    fn promotion_rotates_content(p in path_strategy()) {
        let c = p.content();
        let mut rotated = c.clone();
        rotated.rotate_right(1);
        prop_assert_eq!(pr(&p).unwrap().content(), rotated);
    }

    #[test]
    fn crystal_operators_are_partial_inverses(p in path_strategy(), a in 1usize..=5) {
        prop_assume!(a <= p.rank());
        if let Some(q) = p.f(a).unwrap() {
            prop_assert_eq!(q.e(a).unwrap(), Some(p.clone()));
            prop_assert_eq!(phi(&p).f(a).unwrap(), Some(phi(&q)));
        } else {
            prop_assert_eq!(phi(&p).f(a).unwrap(), None);
        }
        if let Some(q) = p.e(a).unwrap() {
            prop_assert_eq!(q.f(a).unwrap(), Some(p.clone()));
        }
    }

    #[test]
    fn rs_bar_keeps_partitions_and_colabels(p in path_strategy()) {
        let last = *p.shape().rects().last().unwrap();
        prop_assume!(last.width >= 2);
        let rc = phi(&p);
        let split = rc.rs_bar().unwrap();
        for a in 1..=p.rank() {
            let before: Vec<_> = rc.level(a).strings().iter().map(|s| (s.length, rc.colabel(a, s))).collect();
            let after: Vec<_> = split.level(a).strings().iter().map(|s| (s.length, split.colabel(a, s))).collect();
            prop_assert_eq!(before, after);
        }
        prop_assert_eq!(phi(&rs(&p).unwrap()), split);
    }

    #[test]
    fn single_rectangle_matches_area_map(t in (2usize..=5, 1usize..=4, 1usize..=4).prop_flat_map(|(n, h, w)| {
        let h = h.min(n);
        tableau(h, w, n as u32 + 1).prop_map(move |t| (n, t))
    })) {
        let (n, t) = t;
        let p = Path::new(n, vec![t.clone()]).unwrap();
        prop_assert_eq!(psi(&t, n).unwrap(), phi(&p));
        prop_assert_eq!(insert(&t.row_word()).0, t.rows().to_vec());
    }
}
