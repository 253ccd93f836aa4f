//! Rigged configurations of type `A_n` attached to a sequence of rectangles,
//! their vacancy numbers and crystal operators, and the barred splitting
//! maps `lh̄`, `lb̄`, `ls̄`, `rs̄` together with their inverses.

use std::fmt;

use crate::error::{Error, Result};
use crate::paths::{Rect, RectangleSeq, Weight};
use crate::young::Letter;

/// A row of a rigged partition: its length and its label (rigging).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RiggedString {
    pub length: usize,
    pub label: i64,
}

impl RiggedString {
    pub fn new(length: usize, label: i64) -> Self {
        RiggedString { length, label }
    }
}

/// Canonical order: longer first, then larger label first. Under this order
/// `x ≻ y` means `x` comes earlier.
impl Ord for RiggedString {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.length.cmp(&self.length).then(other.label.cmp(&self.label))
    }
}

impl PartialOrd for RiggedString {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A partition with one label per part, kept in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RiggedPartition(Vec<RiggedString>);

impl RiggedPartition {
    pub fn new(mut strings: Vec<RiggedString>) -> Self {
        strings.sort();
        RiggedPartition(strings)
    }

    pub fn strings(&self) -> &[RiggedString] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|s| s.length).sum()
    }

    pub fn parts(&self) -> Vec<usize> {
        self.0.iter().map(|s| s.length).collect()
    }

    /// `Q_i = sum_j min(i, j) m_j`.
    pub fn q(&self, i: usize) -> i64 {
        self.0.iter().map(|s| s.length.min(i) as i64).sum()
    }
}

/// One entry of a selection sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selection {
    /// No string taken at this level (above the active range).
    Infinite,
    /// A new string is created from nothing.
    ZeroLength,
    /// An existing string, recorded before modification.
    String(RiggedString),
}

impl Selection {
    /// Length as an extended integer; `None` is infinity.
    pub fn length(&self) -> Option<usize> {
        match self {
            Selection::Infinite => None,
            Selection::ZeroLength => Some(0),
            Selection::String(s) => Some(s.length),
        }
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selection::Infinite => f.write_str("(∞,0)"),
            Selection::ZeroLength => f.write_str("(0,0)"),
            Selection::String(s) => write!(f, "({},{})", s.length, s.label),
        }
    }
}

/// Per-level selections `entries[k]` for `k = 0..=top`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SelectionSequence {
    pub entries: Vec<Selection>,
}

impl SelectionSequence {
    pub fn level(&self, k: usize) -> Selection {
        self.entries.get(k).copied().unwrap_or(Selection::Infinite)
    }

    /// Lengths from the top level down to level 0.
    pub fn lengths_desc(&self) -> Vec<Option<usize>> {
        self.entries.iter().rev().map(Selection::length).collect()
    }
}

impl fmt::Display for SelectionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.entries.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// A rigged configuration of rank `n` over a sequence of rectangles:
/// rigged partitions `ν^(1), ..., ν^(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RiggedConfiguration {
    rank: usize,
    shape: RectangleSeq,
    levels: Vec<RiggedPartition>,
}

/// How a string of a configuration under construction gets its label.
#[derive(Clone, Copy, Debug)]
enum Rig {
    Label(i64),
    Colabel(i64),
    Singular,
}

type Draft = Vec<Vec<(usize, Rig)>>;

impl RiggedConfiguration {
    /// Builds and validates: every label must be at most its vacancy number.
    pub fn new(rank: usize, shape: RectangleSeq, levels: Vec<Vec<(usize, i64)>>) -> Result<Self> {
        let rc = Self::unchecked(rank, shape, levels)?;
        rc.check_labels()?;
        Ok(rc)
    }

    /// Same as [`new`](Self::new) but the numbers are colabels
    /// (vacancy minus label).
    pub fn from_colabels(rank: usize, shape: RectangleSeq, levels: Vec<Vec<(usize, i64)>>) -> Result<Self> {
        let base = Self::unchecked(rank, shape, levels)?;
        let draft = base
            .levels
            .iter()
            .map(|nu| nu.0.iter().map(|s| (s.length, Rig::Colabel(s.label))).collect())
            .collect();
        let rc = Self::assemble(rank, base.shape, draft);
        rc.check_labels()?;
        Ok(rc)
    }

    /// Builds without checking labels against vacancy numbers.
    pub fn unchecked(rank: usize, shape: RectangleSeq, levels: Vec<Vec<(usize, i64)>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidConfiguration("rank must be at least 1".into()));
        }
        shape.check_rank(rank).map_err(|e| Error::InvalidConfiguration(e.to_string()))?;
        if levels.len() != rank {
            return Err(Error::InvalidConfiguration(format!("expected {rank} levels, got {}", levels.len())));
        }
        let mut out = Vec::with_capacity(rank);
        for (a, lv) in levels.into_iter().enumerate() {
            if lv.iter().any(|&(len, _)| len == 0) {
                return Err(Error::InvalidConfiguration(format!("zero-length string at level {}", a + 1)));
            }
            out.push(RiggedPartition::new(lv.into_iter().map(|(l, x)| RiggedString::new(l, x)).collect()));
        }
        Ok(RiggedConfiguration { rank, shape, levels: out })
    }

    pub fn empty(rank: usize, shape: RectangleSeq) -> Self {
        RiggedConfiguration { rank, shape, levels: vec![RiggedPartition::default(); rank] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shape(&self) -> &RectangleSeq {
        &self.shape
    }

    /// `ν^(a)` for `1 <= a <= n`.
    pub fn level(&self, a: usize) -> &RiggedPartition {
        &self.levels[a - 1]
    }

    pub fn levels(&self) -> &[RiggedPartition] {
        &self.levels
    }

    /// Level sizes `|ν^(a)|` for `a = 1..=n`.
    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(RiggedPartition::size).collect()
    }

    /// The same data over another sequence of rectangles.
    pub fn with_shape(&self, shape: RectangleSeq) -> Result<Self> {
        shape.check_rank(self.rank).map_err(|e| Error::InvalidConfiguration(e.to_string()))?;
        Ok(RiggedConfiguration { rank: self.rank, shape, levels: self.levels.clone() })
    }

    /// The same data with the rank raised or lowered. Lowering requires the
    /// dropped levels to be empty.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        if rank < self.rank && self.levels[rank..].iter().any(|nu| !nu.is_empty()) {
            return Err(Error::InvalidConfiguration(format!("levels above {rank} are not empty")));
        }
        let mut levels = self.levels.clone();
        levels.resize(rank, RiggedPartition::default());
        let shape = self.shape.clone();
        shape.check_rank(rank).map_err(|e| Error::InvalidConfiguration(e.to_string()))?;
        Ok(RiggedConfiguration { rank, shape, levels })
    }

    /// Vacancy number `p_i^(a)`; levels `0` and `n+1` count as empty.
    pub fn vacancy(&self, a: usize, i: usize) -> i64 {
        vacancy_of(&self.shape, |b| self.levels.get(b.wrapping_sub(1)).map(|nu| nu.q(i)), a, i)
    }

    /// Vacancy number at lengths beyond every part.
    pub fn vacancy_stable(&self, a: usize) -> i64 {
        let big = self.shape.rects().iter().map(|r| r.width).max().unwrap_or(0)
            + self.levels.iter().flat_map(|nu| nu.0.iter().map(|s| s.length)).max().unwrap_or(0);
        self.vacancy(a, big.max(1))
    }

    pub fn colabel(&self, a: usize, s: &RiggedString) -> i64 {
        self.vacancy(a, s.length) - s.label
    }

    pub fn is_singular(&self, a: usize, s: &RiggedString) -> bool {
        self.colabel(a, s) == 0
    }

    pub fn check_labels(&self) -> Result<()> {
        for a in 1..=self.rank {
            for s in &self.levels[a - 1].0 {
                let p = self.vacancy(a, s.length);
                if s.label > p {
                    return Err(Error::InvalidConfiguration(format!(
                        "label {} exceeds vacancy {p} for a string of length {} at level {a}",
                        s.label, s.length
                    )));
                }
            }
        }
        Ok(())
    }

    /// Every vacancy number attached to a part is non-negative and every
    /// label lies in `[0, vacancy]`.
    pub fn is_highest_weight(&self) -> bool {
        (1..=self.rank).all(|a| self.levels[a - 1].0.iter().all(|s| s.label >= 0 && s.label <= self.vacancy(a, s.length)))
    }

    pub fn weight(&self) -> Weight {
        let sizes: Vec<i64> = self.sizes().into_iter().map(|x| x as i64).collect();
        let size = |a: usize| if a == 0 || a > self.rank { 0 } else { sizes[a - 1] };
        let fundamental = (1..=self.rank)
            .map(|a| self.shape.l_term(a, usize::MAX) - 2 * size(a) + size(a - 1) + size(a + 1))
            .collect();
        Weight { fundamental, total_area: self.shape.area() }
    }

    fn check_index(&self, a: usize) -> Result<()> {
        if a == 0 || a > self.rank {
            return Err(Error::IndexOutOfRange { index: a, max: self.rank });
        }
        Ok(())
    }

    fn draft_keep(&self) -> Draft {
        self.levels.iter().map(|nu| nu.0.iter().map(|s| (s.length, Rig::Label(s.label))).collect()).collect()
    }

    fn draft_keep_colabels(&self) -> Draft {
        (1..=self.rank)
            .map(|a| self.levels[a - 1].0.iter().map(|s| (s.length, Rig::Colabel(self.colabel(a, s)))).collect())
            .collect()
    }

    /// Resolve labels against the vacancy numbers of the drafted partitions
    /// over `shape`. Zero-length strings are dropped.
    fn assemble(rank: usize, shape: RectangleSeq, draft: Draft) -> Self {
        let draft: Draft = draft.into_iter().map(|lv| lv.into_iter().filter(|&(l, _)| l > 0).collect()).collect();
        let q = |b: usize, i: usize| -> Option<i64> {
            draft.get(b.wrapping_sub(1)).map(|lv| lv.iter().map(|&(l, _)| l.min(i) as i64).sum())
        };
        let levels = draft
            .iter()
            .enumerate()
            .map(|(idx, lv)| {
                let a = idx + 1;
                RiggedPartition::new(
                    lv.iter()
                        .map(|&(l, rig)| {
                            let label = match rig {
                                Rig::Label(x) => x,
                                Rig::Colabel(c) => vacancy_of(&shape, |b| q(b, l), a, l) - c,
                                Rig::Singular => vacancy_of(&shape, |b| q(b, l), a, l),
                            };
                            RiggedString::new(l, label)
                        })
                        .collect(),
                )
            })
            .collect();
        RiggedConfiguration { rank, shape, levels }
    }

    /// Crystal operator `f_a`: lengthen the longest string carrying the
    /// smallest non-positive label (or add a new one), colabels of the
    /// remaining strings fixed. `None` when the result violates a vacancy
    /// bound.
    pub fn f(&self, a: usize) -> Result<Option<Self>> {
        self.check_index(a)?;
        let nu = &self.levels[a - 1];
        let min = nu.0.iter().map(|s| s.label).min();
        let mut draft = self.draft_keep_colabels();
        let changed = match min {
            Some(x) if x <= 0 => {
                // canonical order puts the longest first
                let idx = nu.0.iter().position(|s| s.label == x).expect("minimum is attained");
                let len = nu.0[idx].length + 1;
                draft[a - 1][idx] = (len, Rig::Label(x - 1));
                len
            }
            _ => {
                draft[a - 1].push((1, Rig::Label(-1)));
                1
            }
        };
        let rc = Self::assemble(self.rank, self.shape.clone(), draft);
        let lo = a.saturating_sub(1).max(1);
        let hi = (a + 1).min(self.rank);
        for b in lo..=hi {
            for s in &rc.levels[b - 1].0 {
                if s.label > rc.vacancy(b, s.length) {
                    debug_assert!(b == a && s.length == changed, "only the modified string can break");
                    return Ok(None);
                }
            }
        }
        Ok(Some(rc))
    }

    /// Crystal operator `e_a`: shorten the shortest string carrying the
    /// smallest label, if that label is negative.
    pub fn e(&self, a: usize) -> Result<Option<Self>> {
        self.check_index(a)?;
        let nu = &self.levels[a - 1];
        let Some(x) = nu.0.iter().map(|s| s.label).min() else { return Ok(None) };
        if x >= 0 {
            return Ok(None);
        }
        let idx = nu.0.iter().rposition(|s| s.label == x).expect("minimum is attained");
        let mut draft = self.draft_keep_colabels();
        draft[a - 1][idx] = (nu.0[idx].length - 1, Rig::Label(x + 1));
        Ok(Some(Self::assemble(self.rank, self.shape.clone(), draft)))
    }

    /// `φ_a = p_∞^(a) - min(0, smallest label at level a)`.
    pub fn phi(&self, a: usize) -> Result<i64> {
        self.check_index(a)?;
        let min = self.levels[a - 1].0.iter().map(|s| s.label).min().unwrap_or(0);
        Ok(self.vacancy_stable(a) - min.min(0))
    }

    /// `ε_a = -min(0, smallest label at level a)`.
    pub fn epsilon(&self, a: usize) -> Result<i64> {
        self.check_index(a)?;
        Ok(-self.levels[a - 1].0.iter().map(|s| s.label).min().unwrap_or(0).min(0))
    }

    /// `lh̄`: requires the first rectangle to be `(1,1)`. Returns the
    /// return level `rk` in `1..=n+1`, the configuration over `lh(B)`, and
    /// the selected strings.
    pub fn lh_bar(&self) -> Result<(Letter, Self, SelectionSequence)> {
        if self.shape.head() != Some(Rect::new(1, 1)) {
            return Err(Error::Shape { map: "lh̄", detail: format!("shape {} does not start with (1,1)", self.shape) });
        }
        let mut entries = vec![Selection::Infinite; self.rank + 1];
        entries[0] = Selection::ZeroLength;
        let mut draft = self.draft_keep();
        let mut bound = 1;
        let mut rk = self.rank + 1;
        for a in 1..=self.rank {
            // shortest singular string of length >= bound
            let pick = self.levels[a - 1]
                .0
                .iter()
                .enumerate()
                .rev()
                .find(|(_, s)| s.length >= bound && self.is_singular(a, s));
            match pick {
                None => {
                    rk = a;
                    break;
                }
                Some((idx, s)) => {
                    entries[a] = Selection::String(*s);
                    draft[a - 1][idx] = (s.length - 1, Rig::Singular);
                    bound = s.length;
                }
            }
        }
        let shape = RectangleSeq(self.shape.0[1..].to_vec());
        Ok((rk as Letter, Self::assemble(self.rank, shape, draft), SelectionSequence { entries }))
    }

    /// `lh̄⁻¹(rc, r)`, `1 <= r <= n+1`: add a box to a chain of singular
    /// strings on levels `r-1, ..., 1`, over `((1,1), B)`.
    pub fn lh_bar_inv(&self, r: Letter) -> Result<(Self, SelectionSequence)> {
        let r = r as usize;
        if r == 0 || r > self.rank + 1 {
            return Err(Error::IndexOutOfRange { index: r, max: self.rank + 1 });
        }
        let mut entries = vec![Selection::Infinite; self.rank + 1];
        entries[0] = Selection::ZeroLength;
        let mut draft = self.draft_keep();
        let mut bound = usize::MAX;
        for k in (1..r).rev() {
            // longest singular string of length <= bound
            let pick = self.levels[k - 1]
                .0
                .iter()
                .enumerate()
                .find(|(_, s)| s.length <= bound && self.is_singular(k, s));
            match pick {
                None => {
                    entries[k] = Selection::ZeroLength;
                    draft[k - 1].push((1, Rig::Singular));
                    bound = 0;
                }
                Some((idx, s)) => {
                    entries[k] = Selection::String(*s);
                    draft[k - 1][idx] = (s.length + 1, Rig::Singular);
                    bound = s.length;
                }
            }
        }
        let mut shape = vec![Rect::new(1, 1)];
        shape.extend_from_slice(self.shape.rects());
        Ok((Self::assemble(self.rank, RectangleSeq(shape), draft), SelectionSequence { entries }))
    }

    /// Remove one box from a singular string of length `lengths[k-1]` at
    /// every level `k` and make the shortened strings singular again. The
    /// shape is unchanged.
    pub fn shorten_singular(&self, lengths: &[usize]) -> Result<Self> {
        let mut draft = self.draft_keep();
        for (idx, &len) in lengths.iter().enumerate() {
            let a = idx + 1;
            let pos = self.levels[idx]
                .0
                .iter()
                .position(|s| s.length == len && self.is_singular(a, s))
                .ok_or_else(|| Error::Domain { map: "ρ̄", detail: format!("no singular string of length {len} at level {a}") })?;
            draft[idx][pos] = (len - 1, Rig::Singular);
        }
        Ok(Self::assemble(self.rank, self.shape.clone(), draft))
    }

    /// `ls̄`: split the first column off a leading `(r,s)`, `s >= 2`.
    /// The partitions and labels do not change.
    pub fn ls_bar(&self) -> Result<Self> {
        let head = self.shape.head().ok_or_else(|| Error::Shape { map: "ls̄", detail: "empty shape".into() })?;
        if head.width == 1 {
            return Ok(self.clone());
        }
        let mut shape = vec![Rect::new(head.height, 1), Rect::new(head.height, head.width - 1)];
        shape.extend_from_slice(&self.shape.rects()[1..]);
        Ok(RiggedConfiguration { rank: self.rank, shape: RectangleSeq(shape), levels: self.levels.clone() })
    }

    /// `ls̄⁻¹`: merge a leading `(r,1),(r,s)` into `(r,s+1)`. Defined only
    /// when every part of `ν^(r)` of length at most `s` has positive colabel.
    pub fn ls_bar_inv(&self) -> Result<Self> {
        let (a, b) = match self.shape.rects() {
            [a, b, ..] if a.width == 1 && a.height == b.height => (*a, *b),
            _ => return Err(Error::Shape { map: "ls̄⁻¹", detail: format!("shape {} does not start with (r,1),(r,s)", self.shape) }),
        };
        let r = a.height;
        if r <= self.rank {
            for s in &self.levels[r - 1].0 {
                if s.length <= b.width && self.colabel(r, s) < 1 {
                    return Err(Error::Domain {
                        map: "ls̄⁻¹",
                        detail: format!("singular string of length {} <= {} at level {r}", s.length, b.width),
                    });
                }
            }
        }
        let mut shape = vec![Rect::new(r, b.width + 1)];
        shape.extend_from_slice(&self.shape.rects()[2..]);
        Ok(RiggedConfiguration { rank: self.rank, shape: RectangleSeq(shape), levels: self.levels.clone() })
    }

    /// `lb̄`: a leading column `(r,1)`, `r >= 2`, becomes `(1,1),(r-1,1)`
    /// and a singular string of length 1 is added at each level below `r`.
    pub fn lb_bar(&self) -> Result<Self> {
        let head = self.shape.head().ok_or_else(|| Error::Shape { map: "lb̄", detail: "empty shape".into() })?;
        if head.width != 1 || head.height < 2 {
            return Err(Error::Shape { map: "lb̄", detail: format!("head {head} is not a column of height >= 2") });
        }
        let r = head.height;
        let mut draft = self.draft_keep();
        for lv in draft.iter_mut().take(r - 1) {
            lv.push((1, Rig::Singular));
        }
        let mut shape = vec![Rect::new(1, 1), Rect::new(r - 1, 1)];
        shape.extend_from_slice(&self.shape.rects()[1..]);
        Ok(Self::assemble(self.rank, RectangleSeq(shape), draft))
    }

    /// `lb̄⁻¹`: remove a singular string of length 1 from each level below
    /// `r` and merge `(1,1),(r-1,1)` into `(r,1)`.
    pub fn lb_bar_inv(&self) -> Result<Self> {
        let r = match self.shape.rects() {
            [a, b, ..] if *a == Rect::new(1, 1) && b.width == 1 => b.height + 1,
            _ => return Err(Error::Shape { map: "lb̄⁻¹", detail: format!("shape {} does not start with (1,1),(r,1)", self.shape) }),
        };
        let mut draft = self.draft_keep();
        for a in 1..r.min(self.rank + 1) {
            let idx = self.levels[a - 1]
                .0
                .iter()
                .rposition(|s| s.length == 1 && self.is_singular(a, s))
                .ok_or_else(|| Error::Domain { map: "lb̄⁻¹", detail: format!("no singular string of length 1 at level {a}") })?;
            draft[a - 1].remove(idx);
        }
        let mut shape = vec![Rect::new(r, 1)];
        shape.extend_from_slice(&self.shape.rects()[2..]);
        Ok(Self::assemble(self.rank, RectangleSeq(shape), draft))
    }

    /// `rs̄`: split the last rectangle `(r,s)`, `s >= 2`, into
    /// `(r,s-1),(r,1)`; labels of parts of `ν^(r)` shorter than `s` go up
    /// by one.
    pub fn rs_bar(&self) -> Result<Self> {
        let last = *self.shape.rects().last().ok_or_else(|| Error::Shape { map: "rs̄", detail: "empty shape".into() })?;
        if last.width < 2 {
            return Err(Error::Shape { map: "rs̄", detail: format!("last rectangle {last} has width 1") });
        }
        let mut levels = self.levels.clone();
        if last.height <= self.rank {
            let nu = &mut levels[last.height - 1];
            *nu = RiggedPartition::new(
                nu.0.iter()
                    .map(|s| if s.length < last.width { RiggedString::new(s.length, s.label + 1) } else { *s })
                    .collect(),
            );
        }
        let mut shape = self.shape.rects()[..self.shape.len() - 1].to_vec();
        shape.push(Rect::new(last.height, last.width - 1));
        shape.push(Rect::new(last.height, 1));
        Ok(RiggedConfiguration { rank: self.rank, shape: RectangleSeq(shape), levels })
    }
}

/// `p_i^(a) = sum_{(a,s) in B} min(i,s) - 2Q_i(ν^a) + Q_i(ν^{a-1}) + Q_i(ν^{a+1})`,
/// with `q(b)` returning `Q_i(ν^b)` or `None` outside `1..=n`.
fn vacancy_of(shape: &RectangleSeq, q: impl Fn(usize) -> Option<i64>, a: usize, i: usize) -> i64 {
    let qa = |b: usize| if b == 0 { 0 } else { q(b).unwrap_or(0) };
    shape.l_term(a, i) - 2 * qa(a) + qa(a - 1) + qa(a + 1)
}

impl fmt::Display for RiggedConfiguration {
    /// One block per level: a row of boxes per string followed by
    /// `length | label`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rc n={} B={}", self.rank, self.shape)?;
        for (idx, nu) in self.levels.iter().enumerate() {
            writeln!(f, "ν({}):", idx + 1)?;
            if nu.is_empty() {
                writeln!(f, "  (empty)")?;
            }
            for s in &nu.0 {
                writeln!(f, "  {:<w$} {} | {}", "□".repeat(s.length), s.length, s.label, w = nu.0[0].length)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(v: &[(usize, usize)]) -> RectangleSeq {
        RectangleSeq::new(v.iter().copied())
    }

    fn running() -> RiggedConfiguration {
        // ν = ((2),(1),(1)) over ((2,2),(1,2),(3,1)), n = 3
        RiggedConfiguration::unchecked(3, shape(&[(2, 2), (1, 2), (3, 1)]), vec![vec![(2, -1)], vec![(1, 1)], vec![(1, 0)]])
            .unwrap()
    }

    #[test]
    fn vacancy_numbers_of_running_example() {
        let rc = running();
        assert_eq!(rc.vacancy(1, 2), -1);
        assert_eq!(rc.vacancy(2, 1), 1);
        assert_eq!(rc.vacancy(3, 1), 0);
    }

    #[test]
    fn weight_of_running_example() {
        let w = running().weight();
        assert_eq!(w.fundamental, vec![-1, 3, 0]);
        assert_eq!(w.ambient(), vec![3, 4, 1, 1]);
    }

    #[test]
    fn lb_bar_on_a_column() {
        let rc = RiggedConfiguration::empty(1, shape(&[(2, 1)]));
        let out = rc.lb_bar().unwrap();
        assert_eq!(out.shape(), &shape(&[(1, 1), (1, 1)]));
        assert_eq!(out.level(1).strings(), &[RiggedString::new(1, 0)]);
        assert_eq!(out.lb_bar_inv().unwrap(), rc);
    }

    #[test]
    fn rs_bar_keeps_colabels() {
        let rc = RiggedConfiguration::new(2, shape(&[(2, 2)]), vec![vec![(1, -1)], vec![(1, 0)]]).unwrap();
        let out = rc.rs_bar().unwrap();
        assert_eq!(out.level(2).strings(), &[RiggedString::new(1, 1)]);
        assert!(out.is_singular(2, &out.level(2).strings()[0]));
    }

    #[test]
    fn single_box_bijection_step() {
        let rc = RiggedConfiguration::empty(1, RectangleSeq::default());
        let (out, d) = rc.lh_bar_inv(2).unwrap();
        assert_eq!(out.level(1).strings(), &[RiggedString::new(1, -1)]);
        assert_eq!(d.level(1), Selection::ZeroLength);
        let (rk, back, _) = out.lh_bar().unwrap();
        assert_eq!(rk, 2);
        assert_eq!(back, rc);
    }

    #[test]
    fn colabel_constructor() {
        let rc = RiggedConfiguration::from_colabels(3, shape(&[(2, 2)]), vec![vec![], vec![(2, 0)], vec![(2, 0)]]).unwrap();
        let labels: Vec<i64> = (2..=3).map(|a| rc.level(a).strings()[0].label).collect();
        assert_eq!(labels, vec![0, -2]);
        assert!(RiggedConfiguration::new(3, shape(&[(2, 2)]), vec![vec![], vec![(2, 0)], vec![(2, 0)]]).is_err());
    }

    #[test]
    fn crystal_operators_on_a_single_box() {
        // B = (1,1), n = 1: the two paths [1] and [2]
        let top = RiggedConfiguration::empty(1, shape(&[(1, 1)]));
        let low = top.f(1).unwrap().unwrap();
        assert_eq!(low.level(1).strings(), &[RiggedString::new(1, -1)]);
        assert_eq!(low.f(1).unwrap(), None);
        assert_eq!(low.e(1).unwrap(), Some(top.clone()));
        assert_eq!(top.e(1).unwrap(), None);
    }

    #[test]
    fn ls_bar_inv_domain() {
        // the image of [2] (x) [1]: ν^(1) = (1) singular with label 0
        let rc = RiggedConfiguration::new(1, shape(&[(1, 1), (1, 1)]), vec![vec![(1, 0)]]).unwrap();
        assert!(matches!(rc.ls_bar_inv(), Err(Error::Domain { .. })));
    }
}
