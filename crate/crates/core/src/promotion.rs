//! Promotion on paths (`pr`, built from the slide step `ρ`) and its rigged
//! configuration counterpart (`p̄r`, built from `ρ̄`), plus `rs`, the R-matrices and the affine
//! operators `e_0`, `f_0`.

use crate::bijection::{phi, phi_inv, psi};
use crate::error::{Error, Result, Undefined};
use crate::paths::{Path, RectangleSeq};
use crate::rigged::{RiggedConfiguration, Selection, SelectionSequence};
use crate::young::{reverse_slide_from, Cell, Letter, TieRule};

/// Which cell of the acting rectangle `ρ` empties before sliding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RemovalCell {
    /// The bottom-right corner (the correct choice).
    #[default]
    Corner,
    /// The bottom-left cell; used to check that the verifier notices.
    BottomLeft,
}

/// The two knobs of the slide that mutation testing flips.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SlideRules {
    pub tie: TieRule,
    pub removal: RemovalCell,
}

/// `p -> p + 1` entrywise, as a path of rank `n+1`.
pub fn lift(p: &Path) -> Path {
    let factors = p.factors().iter().map(|t| t.map_entries(|x| x + 1).expect("shifting keeps semistandardness")).collect();
    Path::new(p.rank() + 1, factors).expect("letters stay within n+2")
}

/// One step `ρ` at rank `N`: in the rightmost rectangle containing `N+1`,
/// empty the bottom-right corner, slide the hole to the top left and fill
/// it with 1. Paths without `N+1` are fixed.
pub fn rho(p: &Path) -> Result<Path> {
    rho_with(p, SlideRules::default())
}

pub fn rho_with(p: &Path, rules: SlideRules) -> Result<Path> {
    let top = p.rank() as Letter + 1;
    let Some(k) = p.factors().iter().rposition(|t| t.count(top) > 0) else { return Ok(p.clone()) };
    let t = &p.factors()[k];
    let start = match rules.removal {
        RemovalCell::Corner => Cell::new(t.height(), t.width()),
        RemovalCell::BottomLeft => Cell::new(t.height(), 1),
    };
    let (punctured, _) = reverse_slide_from(t, start, rules.tie)?;
    if punctured.get(Cell::new(2, 1)) == Some(1) {
        return Err(Undefined::NotInDomRho.into());
    }
    let filled = punctured.fill(1)?;
    let mut factors = p.factors().to_vec();
    factors[k] = filled;
    Path::new(p.rank(), factors)
}

/// Promotion `pr = ρ^m ∘ l`, where `m` counts the letters `n+2` of `l(p)`.
pub fn pr(p: &Path) -> Result<Path> {
    pr_with(p, SlideRules::default())
}

pub fn pr_with(p: &Path, rules: SlideRules) -> Result<Path> {
    let mut q = lift(p);
    let m = q.count(p.rank() as Letter + 2);
    for _ in 0..m {
        q = rho_with(&q, rules)?;
    }
    q.with_rank(p.rank()).map_err(|e| Error::InvalidPath(format!("promotion left letter n+2 behind: {e}")))
}

/// The orbit `l(p), ρ(l(p)), ...` up to the first path without `n+2`.
pub fn rho_orbit(p: &Path) -> Result<Vec<Path>> {
    let mut q = lift(p);
    let top = p.rank() as Letter + 2;
    let mut out = vec![q.clone()];
    while q.count(top) > 0 {
        q = rho(&q)?;
        out.push(q.clone());
    }
    Ok(out)
}

/// `pr⁻¹`, found by running the promotion orbit until it closes.
pub fn pr_inv(p: &Path) -> Result<Path> {
    let mut prev = p.clone();
    let mut cur = pr(p)?;
    while cur != *p {
        prev = cur;
        cur = pr(&prev)?;
    }
    Ok(prev)
}

/// `l̄`: raise the rank to `n+1` and apply `f_{n+1}^{λ_{n+1}}`, then
/// `f_n^{λ_n}`, ..., `f_1^{λ_1}`, where `λ` is the ambient weight.
pub fn lift_bar(rc: &RiggedConfiguration) -> Result<RiggedConfiguration> {
    let lam = rc.weight().ambient();
    let mut out = rc.with_rank(rc.rank() + 1)?;
    for a in (1..=rc.rank() + 1).rev() {
        for _ in 0..lam[a - 1] {
            out = out.f(a)?.ok_or(Undefined::CrystalOperator { index: a })?;
        }
    }
    Ok(out)
}

/// One step `ρ̄` at rank `N`: take the shortest singular string of `ν^(N)`,
/// then on each lower level the shortest singular string at least as long
/// as the previous choice; shorten all of them by one box and make them
/// singular again. Returns `None` as selection when `ν^(N)` has no
/// singular string, in which case nothing changes.
pub fn rho_bar(rc: &RiggedConfiguration) -> Result<(RiggedConfiguration, Option<SelectionSequence>)> {
    let n = rc.rank();
    let mut entries = vec![Selection::Infinite; n + 1];
    let mut bound = 0;
    for k in (1..=n).rev() {
        let pick = rc.level(k).strings().iter().rev().find(|s| s.length >= bound && rc.is_singular(k, s));
        match pick {
            Some(s) => {
                entries[k] = Selection::String(*s);
                bound = s.length;
            }
            None if k == n => return Ok((rc.clone(), None)),
            None => return Err(Undefined::RhoBarIllDefined { level: k }.into()),
        }
    }
    let chosen: Vec<usize> = (1..=n).map(|k| entries[k].length().expect("selected above")).collect();
    let shortened = rc.shorten_singular(&chosen)?;
    Ok((shortened, Some(SelectionSequence { entries })))
}

/// `p̄r = ρ̄^m ∘ l̄`, `m` the size of the top level after lifting.
pub fn pr_bar(rc: &RiggedConfiguration) -> Result<RiggedConfiguration> {
    let mut q = lift_bar(rc)?;
    let m = q.level(rc.rank() + 1).size();
    for _ in 0..m {
        q = rho_bar(&q)?.0;
    }
    q.with_rank(rc.rank())
}

/// The `ρ̄` selection sequences met while computing `p̄r`.
pub fn pr_bar_selections(rc: &RiggedConfiguration) -> Result<Vec<SelectionSequence>> {
    let mut q = lift_bar(rc)?;
    let m = q.level(rc.rank() + 1).size();
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        let (next, sel) = rho_bar(&q)?;
        out.extend(sel);
        q = next;
    }
    Ok(out)
}

pub fn pr_bar_inv(rc: &RiggedConfiguration) -> Result<RiggedConfiguration> {
    let mut prev = rc.clone();
    let mut cur = pr_bar(rc)?;
    while cur != *rc {
        prev = cur;
        cur = pr_bar(&prev)?;
    }
    Ok(prev)
}

/// For a single rectangle `p` of rank `N` containing `N+1`: the length of
/// the part that loses a box at each level `N, ..., 1` when passing from
/// `Ψ(p)` to `Ψ(ρ(p))`.
pub fn rhobb_sequence(p: &Path) -> Result<Vec<usize>> {
    let [t] = p.factors() else {
        return Err(Error::Shape { map: "ρ̄̄", detail: format!("expected one rectangle, got {}", p.shape()) });
    };
    let q = rho(p)?;
    let before = psi(t, p.rank())?;
    let after = psi(&q.factors()[0], p.rank())?;
    (1..=p.rank())
        .rev()
        .map(|k| {
            let mut old = before.level(k).parts();
            let mut new = after.level(k).parts();
            new.retain(|&l| l > 0);
            // drop common parts; what remains is l in old and l-1 in new
            for l in new.clone() {
                if let Some(i) = old.iter().position(|&x| x == l) {
                    old.remove(i);
                    let j = new.iter().position(|&x| x == l).expect("present");
                    new.remove(j);
                }
            }
            match (old.as_slice(), new.as_slice()) {
                ([l], []) if *l == 1 => Ok(1),
                ([l], [m]) if *m + 1 == *l => Ok(*l),
                _ => Err(Error::Domain { map: "ρ̄̄", detail: format!("level {k} did not lose exactly one box") }),
            }
        })
        .collect()
}

/// `rs = Φ⁻¹ ∘ rs̄ ∘ Φ`: split the last rectangle `(r,s)`, `s >= 2`, into
/// `(r,s-1),(r,1)`.
pub fn rs(p: &Path) -> Result<Path> {
    phi_inv(&phi(p).rs_bar()?)
}

/// `σ(B) = (B_{σ(1)}, ..., B_{σ(K)})`; `perm` is 0-based.
pub fn permute_shape(shape: &RectangleSeq, perm: &[usize]) -> Result<RectangleSeq> {
    let k = shape.len();
    let mut seen = vec![false; k];
    if perm.len() != k || perm.iter().any(|&i| i >= k || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::Shape { map: "R", detail: format!("{perm:?} is not a permutation of {k} factors") });
    }
    Ok(RectangleSeq(perm.iter().map(|&i| shape.rects()[i]).collect()))
}

/// The combinatorial R-matrix `R_σ = Φ⁻¹ ∘ Φ`, reading `Φ(p)` over `σ(B)`.
pub fn r_matrix(p: &Path, perm: &[usize]) -> Result<Path> {
    let shape = permute_shape(&p.shape(), perm)?;
    phi_inv(&phi(p).with_shape(shape)?)
}

pub fn f0(p: &Path) -> Result<Option<Path>> {
    match pr(p)?.f(1)? {
        None => Ok(None),
        Some(q) => pr_inv(&q).map(Some),
    }
}

pub fn e0(p: &Path) -> Result<Option<Path>> {
    match pr(p)?.e(1)? {
        None => Ok(None),
        Some(q) => pr_inv(&q).map(Some),
    }
}

pub fn f0_bar(rc: &RiggedConfiguration) -> Result<Option<RiggedConfiguration>> {
    match pr_bar(rc)?.f(1)? {
        None => Ok(None),
        Some(q) => pr_bar_inv(&q).map(Some),
    }
}

pub fn e0_bar(rc: &RiggedConfiguration) -> Result<Option<RiggedConfiguration>> {
    match pr_bar(rc)?.e(1)? {
        None => Ok(None),
        Some(q) => pr_bar_inv(&q).map(Some),
    }
}

/// Where the letter `N+1` sits in a path of rank `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Placement {
    /// `N+1` occurs only in the leftmost rectangle (or not at all).
    pub leftmost: bool,
    /// Leftmost and the path is a single rectangle.
    pub single_rectangle: bool,
    /// Leftmost and the leftmost rectangle is a single column.
    pub single_column: bool,
}

pub fn classify(p: &Path) -> Placement {
    let top = p.rank() as Letter + 1;
    let leftmost = p.factors().iter().skip(1).all(|t| t.count(top) == 0);
    Placement {
        leftmost,
        single_rectangle: leftmost && p.factors().len() == 1,
        single_column: leftmost && p.factors().first().is_some_and(|t| t.width() == 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enumerate_paths;

    fn path(n: usize, s: &str) -> Path {
        Path::parse(n, s).unwrap()
    }

    #[test]
    fn rho_on_a_square() {
        let p = path(7, "1234/2445/3666/5778");
        assert_eq!(rho(&p).unwrap(), path(7, "1134/2245/3466/5677"));
    }

    #[test]
    fn rho_undefined_example() {
        assert_eq!(rho(&path(3, "11/44")), Err(Error::Undefined(Undefined::NotInDomRho)));
    }

    #[test]
    fn rhobb_of_the_square() {
        let p = path(7, "1234/2445/3666/5778");
        assert_eq!(rhobb_sequence(&p).unwrap(), vec![1, 3, 3, 3, 3, 3, 3]);
        let parts: Vec<Vec<usize>> = phi(&rho(&p).unwrap()).levels().iter().map(|nu| nu.parts()).collect();
        let expect: Vec<Vec<usize>> = vec![vec![2], vec![2, 2], vec![3, 2, 1], vec![4, 2, 1], vec![3, 2], vec![2], vec![]];
        assert_eq!(parts, expect);
        let (_, sel) = rho_bar(&phi(&p)).unwrap();
        let lengths: Vec<Option<usize>> = sel.unwrap().lengths_desc().into_iter().take(7).collect();
        assert_eq!(lengths, [1, 3, 3, 3, 3, 3, 3].map(Some).to_vec());
    }

    #[test]
    fn rho_bar_undefined_example() {
        // the image of 11/44 at rank 3, written with colabels
        let rc = RiggedConfiguration::from_colabels(
            3,
            RectangleSeq::new([(2, 2)]),
            vec![vec![], vec![(2, 0)], vec![(2, 0)]],
        )
        .unwrap();
        assert_eq!(rc, phi(&path(3, "11/44")));
        assert_eq!(rho_bar(&rc).unwrap_err(), Error::Undefined(Undefined::RhoBarIllDefined { level: 1 }));
    }

    #[test]
    fn promotion_has_order_n_plus_one() {
        let shape = RectangleSeq::new([(2, 2), (1, 1)]);
        for p in enumerate_paths(2, &shape) {
            let mut q = p.clone();
            for _ in 0..3 {
                q = pr(&q).unwrap();
            }
            assert_eq!(q, p);
        }
    }

    #[test]
    fn rs_on_the_example() {
        let p = path(4, "23/34/45 ⊗ 23/34");
        assert_eq!(rs(&p).unwrap(), path(4, "23/34/45 ⊗ 3/4 ⊗ 2/3"));
    }

    #[test]
    fn r_matrix_examples() {
        let p = path(4, "23/34/45 ⊗ 3/4 ⊗ 2/3");
        assert_eq!(r_matrix(&p, &[1, 0, 2]).unwrap(), path(4, "3/4 ⊗ 23/34/45 ⊗ 2/3"));
        let p = path(4, "23/34/45 ⊗ 2/3");
        assert_eq!(r_matrix(&p, &[1, 0]).unwrap(), path(4, "3/5 ⊗ 22/33/44"));
        assert!(r_matrix(&p, &[0, 0]).is_err());
    }

    #[test]
    fn classification() {
        let c = classify(&path(3, "4 ⊗ 12"));
        assert!(c.leftmost && c.single_column && !c.single_rectangle);
        assert!(!classify(&path(3, "1 ⊗ 4")).leftmost);
    }
}
