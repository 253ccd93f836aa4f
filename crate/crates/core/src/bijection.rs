//! The bijection `Φ: P_n(B) -> RC_n(B)` and its inverse, plus the direct
//! area description `Ψ` of `Φ` on a single rectangle.

use crate::error::{Error, Result};
use crate::paths::{Path, Rect, RectangleSeq};
use crate::rigged::{RiggedConfiguration, SelectionSequence};
use crate::young::{Cell, Letter, Tableau};

/// The `lh̄⁻¹` selection made when one box of a path was added.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellTrace {
    /// Factor index, 0 for the leftmost rectangle.
    pub factor: usize,
    pub row: usize,
    /// Column counted from the right edge of the rectangle, starting at 1.
    pub col_from_right: usize,
    pub letter: Letter,
    pub selection: SelectionSequence,
}

/// `Φ(p)`. Boxes are fed in right to left by factor and column, top to
/// bottom inside a column, which is the order the recursion on the head of
/// `B` unwinds to.
pub fn phi(p: &Path) -> RiggedConfiguration {
    phi_traced(p).0
}

/// `Φ(p)` together with the selection sequence of every box.
pub fn phi_traced(p: &Path) -> (RiggedConfiguration, Vec<CellTrace>) {
    let mut rc = RiggedConfiguration::empty(p.rank(), RectangleSeq::default());
    let mut trace = Vec::with_capacity(p.shape().area());
    for (k, t) in p.factors().iter().enumerate().rev() {
        let (r, s) = (t.height(), t.width());
        for c in (1..=s).rev() {
            for i in 1..=r {
                let b = t.get(Cell::new(i, c));
                let (next, d) = rc.lh_bar_inv(b).expect("letters of a path are at most n+1");
                trace.push(CellTrace { factor: k, row: i, col_from_right: s - c + 1, letter: b, selection: d });
                rc = next;
                if i >= 2 {
                    rc = rc.lb_bar_inv().expect("a strict column always merges");
                }
            }
            if c < s {
                rc = rc.ls_bar_inv().expect("weakly increasing rows always merge");
            }
        }
    }
    (rc, trace)
}

/// `Φ` written as the literal recursion on the head of `B`.
pub fn phi_recursive(p: &Path) -> RiggedConfiguration {
    match p.shape().head() {
        None => RiggedConfiguration::empty(p.rank(), RectangleSeq::default()),
        Some(Rect { height: 1, width: 1 }) => {
            let (b, rest) = p.lh().expect("head is a box");
            phi_recursive(&rest).lh_bar_inv(b).expect("letter in range").0
        }
        Some(Rect { width: 1, .. }) => phi_recursive(&p.lb().expect("head is a column")).lb_bar_inv().expect("lb̄⁻¹"),
        Some(_) => phi_recursive(&p.ls().expect("head is wide")).ls_bar_inv().expect("ls̄⁻¹"),
    }
}

/// `Φ⁻¹(rc)`. Fails with [`Error::Domain`] when `rc` is not the image of a
/// path.
pub fn phi_inv(rc: &RiggedConfiguration) -> Result<Path> {
    rc.check_labels().map_err(|e| Error::Domain { map: "Φ⁻¹", detail: e.to_string() })?;
    let p = phi_inv_rec(rc)?;
    if phi(&p) != *rc {
        return Err(Error::Domain { map: "Φ⁻¹", detail: "configuration is not in the image of Φ".into() });
    }
    Ok(p)
}

fn phi_inv_rec(rc: &RiggedConfiguration) -> Result<Path> {
    match rc.shape().head() {
        None => {
            if rc.levels().iter().any(|nu| !nu.is_empty()) {
                return Err(Error::Domain { map: "Φ⁻¹", detail: "strings left over on the empty shape".into() });
            }
            Ok(Path::empty(rc.rank()))
        }
        Some(Rect { height: 1, width: 1 }) => {
            let (rk, next, _) = rc.lh_bar()?;
            Path::lh_inv(rk, &phi_inv_rec(&next)?)
        }
        Some(Rect { width: 1, .. }) => phi_inv_rec(&rc.lb_bar()?)?.lb_inv(),
        Some(_) => phi_inv_rec(&rc.ls_bar()?)?.ls_inv(),
    }
}

/// The areas `u_1, ..., u_n` of a rectangular tableau: `u_k` consists of the
/// boxes in rows `<= k` holding entries `> k`. Stored as the number of such
/// boxes in each row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaDecomposition {
    pub rows: Vec<Vec<usize>>,
}

impl AreaDecomposition {
    pub fn of_rows(rows: &[Vec<Letter>], rank: usize) -> Self {
        let rows = (1..=rank)
            .map(|k| rows.iter().take(k).map(|row| row.iter().filter(|&&x| x as usize > k).count()).collect())
            .collect();
        AreaDecomposition { rows }
    }

    /// `u_k` read as a partition, `1 <= k <= n`.
    pub fn partition(&self, k: usize) -> Vec<usize> {
        let mut parts: Vec<usize> = self.rows[k - 1].iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

/// `Ψ(T)` for a single rectangle: the partitions of the areas, every string
/// singular.
pub fn psi(t: &Tableau, rank: usize) -> Result<RiggedConfiguration> {
    let shape = RectangleSeq::new([(t.height(), t.width())]);
    let areas = AreaDecomposition::of_rows(t.rows(), rank);
    let levels = (1..=rank).map(|k| areas.partition(k).into_iter().map(|l| (l, 0)).collect()).collect();
    RiggedConfiguration::from_colabels(rank, shape, levels)
}

/// `Ψ̃` on a path `T (x) S` of shape `((t,1),(r,c))` with `t <= r` and
/// `T_{k,1} <= S_{k,1}`: the column is glued to the left of `S`, areas are
/// taken as for `Ψ`, and parts of the level-`t` partition of size at most
/// `c` get colabel 1.
pub fn psi_tilde(p: &Path) -> Result<RiggedConfiguration> {
    let bad = || Error::Shape { map: "Ψ̃", detail: format!("expected a column followed by a rectangle, got {}", p.shape()) };
    let [col, s] = p.factors() else { return Err(bad()) };
    let (t, r, c) = (col.height(), s.height(), s.width());
    if col.width() != 1 || t > r {
        return Err(bad());
    }
    let mut rows = s.rows().to_vec();
    for (i, (row, head)) in rows.iter_mut().zip(col.rows()).enumerate() {
        if head[0] > row[0] {
            return Err(Error::Domain { map: "Ψ̃", detail: format!("column entry exceeds row start in row {}", i + 1) });
        }
        row.insert(0, head[0]);
    }
    let n = p.rank();
    let areas = AreaDecomposition::of_rows(&rows, n);
    let levels = (1..=n)
        .map(|k| {
            areas
                .partition(k)
                .into_iter()
                .map(|l| (l, i64::from(k == t && l <= c)))
                .collect()
        })
        .collect();
    RiggedConfiguration::from_colabels(n, p.shape(), levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enumerate_paths;
    use crate::rigged::RiggedString;

    fn path(n: usize, s: &str) -> Path {
        Path::parse(n, s).unwrap()
    }

    fn parts(rc: &RiggedConfiguration) -> Vec<Vec<usize>> {
        rc.levels().iter().map(|nu| nu.parts()).collect()
    }

    #[test]
    fn single_boxes() {
        let rc = phi(&path(1, "2"));
        assert_eq!(rc.level(1).strings(), &[RiggedString::new(1, -1)]);
        assert!(phi(&path(1, "1")).level(1).is_empty());
        let hw = phi(&path(1, "2 ⊗ 1"));
        assert_eq!(hw.level(1).strings(), &[RiggedString::new(1, 0)]);
        let low = phi(&path(1, "1 ⊗ 2"));
        assert_eq!(low.level(1).strings(), &[RiggedString::new(1, -1)]);
    }

    #[test]
    fn area_example_on_a_square() {
        let t = Tableau::parse("1234/2445/3666/5778").unwrap();
        let rc = psi(&t, 7).unwrap();
        let expect: Vec<Vec<usize>> =
            vec![vec![3], vec![3, 2], vec![3, 3, 1], vec![4, 3, 1], vec![3, 3], vec![3], vec![1]];
        assert_eq!(parts(&rc), expect);
        assert_eq!(phi(&Path::new(7, vec![t]).unwrap()), rc);
    }

    #[test]
    fn recursion_and_unrolled_build_agree() {
        let shape = RectangleSeq::new([(2, 2), (1, 1), (2, 1)]);
        for p in enumerate_paths(2, &shape) {
            assert_eq!(phi(&p), phi_recursive(&p), "{p}");
        }
    }

    #[test]
    fn inverse_round_trip_small() {
        let shape = RectangleSeq::new([(2, 1), (1, 2), (1, 1)]);
        for p in enumerate_paths(2, &shape) {
            assert_eq!(phi_inv(&phi(&p)).unwrap(), p);
        }
    }

    #[test]
    fn inverse_rejects_non_images() {
        let rc = RiggedConfiguration::unchecked(1, RectangleSeq::default(), vec![vec![(1, -2)]]).unwrap();
        assert!(matches!(phi_inv(&rc), Err(Error::Domain { .. })));
    }

    #[test]
    fn psi_tilde_on_two_boxes() {
        let rc = psi_tilde(&path(1, "1 ⊗ 2")).unwrap();
        assert_eq!(rc, phi(&path(1, "1 ⊗ 2")));
    }
}
