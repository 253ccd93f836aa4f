//! Paths: tensor products of rectangular tableaux, with the type `A_n`
//! crystal structure and the splitting maps `lh`, `lb`, `ls` that drive the
//! recursive definition of the bijection.
//!
//! Tensor products use the reverted convention: the word of a path is the
//! concatenation of the factor row words, left to right.

use std::fmt;

use crate::error::{Error, Result};
use crate::young::{rectangular_tableaux, Letter, Tableau, Word};

/// An `r x s` rectangle: `height` rows, `width` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    pub height: usize,
    pub width: usize,
}

impl Rect {
    pub fn new(height: usize, width: usize) -> Self {
        Rect { height, width }
    }

    pub fn area(&self) -> usize {
        self.height * self.width
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.height, self.width)
    }
}

/// The shape `B` of a path: a sequence of rectangles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectangleSeq(pub Vec<Rect>);

impl RectangleSeq {
    pub fn new(rects: impl IntoIterator<Item = (usize, usize)>) -> Self {
        RectangleSeq(rects.into_iter().map(|(r, s)| Rect::new(r, s)).collect())
    }

    pub fn rects(&self) -> &[Rect] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn area(&self) -> usize {
        self.0.iter().map(Rect::area).sum()
    }

    pub fn head(&self) -> Option<Rect> {
        self.0.first().copied()
    }

    pub fn max_height(&self) -> usize {
        self.0.iter().map(|r| r.height).max().unwrap_or(0)
    }

    /// Sum of `min(i, s)` over rectangles `(a, s)` of height exactly `a`.
    pub fn l_term(&self, a: usize, i: usize) -> i64 {
        self.0.iter().filter(|r| r.height == a).map(|r| r.width.min(i) as i64).sum()
    }

    /// Sum of the widths of rectangles of height at least `k`.
    pub fn width_at_least(&self, k: usize) -> usize {
        self.0.iter().filter(|r| r.height >= k).map(|r| r.width).sum()
    }

    /// Parses `2x2,1x2,3x1` (whitespace tolerant). The empty string is the
    /// empty shape.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RectangleSeq::default());
        }
        s.split(',')
            .map(|part| {
                let (r, w) = part
                    .trim()
                    .split_once(['x', 'X'])
                    .ok_or_else(|| Error::Parse(format!("expected RxS, got {part:?}")))?;
                let num = |x: &str| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{x:?}: {e}")));
                let rect = Rect::new(num(r)?, num(w)?);
                if rect.area() == 0 {
                    return Err(Error::Parse(format!("degenerate rectangle {part:?}")));
                }
                Ok(rect)
            })
            .collect::<Result<Vec<_>>>()
            .map(RectangleSeq)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        for r in &self.0 {
            if r.height == 0 || r.width == 0 {
                return Err(Error::InvalidPath(format!("degenerate rectangle {r}")));
            }
            if r.height > rank + 1 {
                return Err(Error::InvalidPath(format!("rectangle {r} is taller than n+1 = {}", rank + 1)));
            }
        }
        Ok(())
    }
}

impl fmt::Display for RectangleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// A weight of `A_n` in fundamental coordinates, together with the total
/// area which pins down the ambient `gl_{n+1}` lift.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub fundamental: Vec<i64>,
    pub total_area: usize,
}

impl Weight {
    /// Weight of a content vector `(l_1, ..., l_{n+1})`.
    pub fn from_content(content: &[i64]) -> Self {
        let fundamental = content.windows(2).map(|w| w[0] - w[1]).collect();
        Weight { fundamental, total_area: content.iter().sum::<i64>() as usize }
    }

    pub fn rank(&self) -> usize {
        self.fundamental.len()
    }

    /// The unique vector `(l_1, ..., l_{n+1})` with `l_a - l_{a+1}` equal to
    /// the fundamental coefficients and coordinate sum equal to the area.
    pub fn ambient(&self) -> Vec<i64> {
        let n = self.rank();
        let mut lam = vec![0i64; n + 1];
        for j in (0..n).rev() {
            lam[j] = lam[j + 1] + self.fundamental[j];
        }
        let deficit = self.total_area as i64 - lam.iter().sum::<i64>();
        debug_assert_eq!(deficit % (n as i64 + 1), 0);
        let shift = deficit / (n as i64 + 1);
        lam.iter().map(|x| x + shift).collect()
    }
}

/// An element of `P_n(B)`: one rectangular tableau per rectangle of `B`,
/// entries in `1..=n+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    rank: usize,
    factors: Vec<Tableau>,
}

/// `(factor, row, column)`, all zero-based.
type Position = (usize, usize, usize);

impl Path {
    pub fn new(rank: usize, factors: Vec<Tableau>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidPath("rank must be at least 1".into()));
        }
        for (k, t) in factors.iter().enumerate() {
            if t.max_entry() as usize > rank + 1 {
                return Err(Error::InvalidPath(format!(
                    "factor {} has entry {} > n+1 = {}",
                    k + 1,
                    t.max_entry(),
                    rank + 1
                )));
            }
            if t.height() > rank + 1 {
                return Err(Error::InvalidPath(format!("factor {} is taller than n+1", k + 1)));
            }
        }
        Ok(Path { rank, factors })
    }

    pub fn empty(rank: usize) -> Self {
        Path { rank, factors: Vec::new() }
    }

    /// Parses factors written as `12/23 (x) 12 (x) 1/2/4`; `⊗` is accepted
    /// as separator too.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s = s.replace('⊗', "(x)");
        let factors = s
            .split("(x)")
            .map(str::trim)
            .filter(|f| !f.is_empty())
            .map(Tableau::parse)
            .collect::<Result<Vec<_>>>()?;
        Path::new(rank, factors)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[Tableau] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Tableau> {
        self.factors
    }

    pub fn shape(&self) -> RectangleSeq {
        RectangleSeq(self.factors.iter().map(|t| Rect::new(t.height(), t.width())).collect())
    }

    /// The same tableaux read as a path of another rank.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        Path::new(rank, self.factors.clone())
    }

    pub fn row_word(&self) -> Word {
        Word::concat(&self.factors.iter().map(Tableau::row_word).collect::<Vec<_>>())
    }

    pub fn col_word(&self) -> Word {
        Word::concat(&self.factors.iter().map(Tableau::col_word).collect::<Vec<_>>())
    }

    /// Number of occurrences of each letter `1..=n+1`.
    pub fn content(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.rank + 1];
        for t in &self.factors {
            for &x in t.rows().iter().flatten() {
                c[x as usize - 1] += 1;
            }
        }
        c
    }

    pub fn weight(&self) -> Weight {
        Weight::from_content(&self.content())
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.factors.iter().map(|t| t.count(letter)).sum()
    }

    fn check_index(&self, a: usize) -> Result<()> {
        if a == 0 || a > self.rank {
            return Err(Error::IndexOutOfRange { index: a, max: self.rank });
        }
        Ok(())
    }

    /// Positions `(factor, row, col)` of the path word, in reading order.
    fn word_positions(&self) -> Vec<Position> {
        let mut pos = Vec::new();
        for (k, t) in self.factors.iter().enumerate() {
            for i in (0..t.height()).rev() {
                for j in 0..t.width() {
                    pos.push((k, i, j));
                }
            }
        }
        pos
    }

    /// Unpaired occurrences of `a` and `a+1` after cancelling every `a+1`
    /// against the nearest free `a` to its right.
    fn unpaired(&self, a: Letter) -> (Vec<Position>, Vec<Position>) {
        let mut free_a = Vec::new();
        let mut open = Vec::new();
        for (k, i, j) in self.word_positions() {
            let x = self.factors[k].rows()[i][j];
            if x == a + 1 {
                open.push((k, i, j));
            } else if x == a && open.pop().is_none() {
                free_a.push((k, i, j));
            }
        }
        (free_a, open)
    }

    fn replace(&self, at: Position, letter: Letter) -> Result<Path> {
        let mut factors = self.factors.clone();
        let mut rows = factors[at.0].clone().into_rows();
        rows[at.1][at.2] = letter;
        factors[at.0] = Tableau::new(rows)?;
        Ok(Path { rank: self.rank, factors })
    }

    /// Kashiwara operator `f_a`, `1 <= a <= n`.
    pub fn f(&self, a: usize) -> Result<Option<Path>> {
        self.check_index(a)?;
        let (free_a, _) = self.unpaired(a as Letter);
        match free_a.last() {
            None => Ok(None),
            Some(&at) => self.replace(at, a as Letter + 1).map(Some),
        }
    }

    /// Kashiwara operator `e_a`, `1 <= a <= n`.
    pub fn e(&self, a: usize) -> Result<Option<Path>> {
        self.check_index(a)?;
        let (_, free_b) = self.unpaired(a as Letter);
        match free_b.first() {
            None => Ok(None),
            Some(&at) => self.replace(at, a as Letter).map(Some),
        }
    }

    pub fn phi(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        Ok(self.unpaired(a as Letter).0.len())
    }

    pub fn epsilon(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        Ok(self.unpaired(a as Letter).1.len())
    }

    pub fn is_highest_weight(&self) -> bool {
        (1..=self.rank).all(|a| self.unpaired(a as Letter).1.is_empty())
    }

    fn head_or(&self, map: &'static str) -> Result<&Tableau> {
        self.factors.first().ok_or_else(|| Error::Shape { map, detail: "empty path".into() })
    }

    /// Split off a leading single box: `[b] (x) rest -> (b, rest)`.
    pub fn lh(&self) -> Result<(Letter, Path)> {
        let head = self.head_or("lh")?;
        if head.height() != 1 || head.width() != 1 {
            return Err(Error::Shape { map: "lh", detail: format!("head is {}x{}", head.height(), head.width()) });
        }
        let rest = Path { rank: self.rank, factors: self.factors[1..].to_vec() };
        Ok((head.rows()[0][0], rest))
    }

    pub fn lh_inv(letter: Letter, rest: &Path) -> Result<Path> {
        let mut factors = Vec::with_capacity(rest.factors.len() + 1);
        factors.push(Tableau::column(&[letter])?);
        factors.extend(rest.factors.iter().cloned());
        Path::new(rest.rank, factors)
    }

    /// Split a leading column `[b_1..b_r]`, `r >= 2`, into
    /// `[b_r] (x) [b_1..b_{r-1}]`.
    pub fn lb(&self) -> Result<Path> {
        let head = self.head_or("lb")?;
        if head.width() != 1 || head.height() < 2 {
            return Err(Error::Shape { map: "lb", detail: format!("head is {}x{}", head.height(), head.width()) });
        }
        let col = head.column_entries(1);
        let (last, top) = col.split_last().expect("height >= 2");
        let mut factors = vec![Tableau::column(&[*last])?, Tableau::column(top)?];
        factors.extend(self.factors[1..].iter().cloned());
        Ok(Path { rank: self.rank, factors })
    }

    pub fn lb_inv(&self) -> Result<Path> {
        let (a, b) = match self.factors.as_slice() {
            [a, b, ..] if a.height() == 1 && a.width() == 1 && b.width() == 1 => (a, b),
            _ => return Err(Error::Shape { map: "lb^-1", detail: "expected (1,1),(r-1,1) at the head".into() }),
        };
        let mut col = b.column_entries(1);
        col.push(a.rows()[0][0]);
        let merged = Tableau::column(&col)
            .map_err(|_| Error::Domain { map: "lb^-1", detail: format!("column {col:?} is not strictly increasing") })?;
        let mut factors = vec![merged];
        factors.extend(self.factors[2..].iter().cloned());
        Ok(Path { rank: self.rank, factors })
    }

    /// Split the first column off a leading rectangle of width `s >= 2`.
    /// Identity when the head has width 1.
    pub fn ls(&self) -> Result<Path> {
        let head = self.head_or("ls")?;
        if head.width() == 1 {
            return Ok(self.clone());
        }
        let first = Tableau::column(&head.column_entries(1))?;
        let rest = Tableau::new(head.rows().iter().map(|r| r[1..].to_vec()).collect())?;
        let mut factors = vec![first, rest];
        factors.extend(self.factors[1..].iter().cloned());
        Ok(Path { rank: self.rank, factors })
    }

    pub fn ls_inv(&self) -> Result<Path> {
        let (a, b) = match self.factors.as_slice() {
            [a, b, ..] if a.width() == 1 && a.height() == b.height() => (a, b),
            _ => return Err(Error::Shape { map: "ls^-1", detail: "expected (r,1),(r,s) at the head".into() }),
        };
        let rows = a.rows().iter().zip(b.rows()).map(|(x, y)| [x.as_slice(), y].concat()).collect();
        let merged = Tableau::new(rows).map_err(|e| Error::Domain { map: "ls^-1", detail: e.to_string() })?;
        let mut factors = vec![merged];
        factors.extend(self.factors[2..].iter().cloned());
        Ok(Path { rank: self.rank, factors })
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("(empty)");
        }
        for (k, t) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ⊗ ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Every element of `P_n(B)`, factors enumerated lexicographically by row
/// word, the last factor varying fastest.
pub fn enumerate_paths(rank: usize, shape: &RectangleSeq) -> PathIter {
    let choices: Vec<Vec<Tableau>> =
        shape.rects().iter().map(|r| rectangular_tableaux(r.height, r.width, rank as Letter + 1)).collect();
    let done = choices.iter().any(Vec::is_empty);
    PathIter { rank, idx: vec![0; choices.len()], choices, done }
}

pub struct PathIter {
    rank: usize,
    choices: Vec<Vec<Tableau>>,
    idx: Vec<usize>,
    done: bool,
}

impl PathIter {
    pub fn total(&self) -> usize {
        self.choices.iter().map(Vec::len).product()
    }
}

impl Iterator for PathIter {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if self.done {
            return None;
        }
        let factors = self.idx.iter().zip(&self.choices).map(|(&i, c)| c[i].clone()).collect();
        let item = Path { rank: self.rank, factors };
        // odometer step
        let mut k = self.idx.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.idx[k] += 1;
            if self.idx[k] < self.choices[k].len() {
                break;
            }
            self.idx[k] = 0;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize, s: &str) -> Path {
        Path::parse(n, s).unwrap()
    }

    /// Tensor-product rule on letters, folded left to right:
    /// acting on `b1 (x) b2` hits `b2` iff `phi(b2) > eps(b1)`.
    fn oracle_f(word: &[Letter], a: Letter) -> Option<Vec<Letter>> {
        // (eps, phi) of the prefix
        let mut state = (0usize, 0usize);
        let mut target = None;
        for (pos, &x) in word.iter().enumerate() {
            let (e2, p2) = if x == a {
                (0, 1)
            } else if x == a + 1 {
                (1, 0)
            } else {
                (0, 0)
            };
            let (e1, p1) = state;
            if p2 > e1 {
                target = Some(pos);
            }
            // Kashiwara's formula with the factors swapped
            state = (e2 + e1.saturating_sub(p2), p1 + p2.saturating_sub(e1));
        }
        if state.1 == 0 {
            return None;
        }
        let mut w = word.to_vec();
        w[target?] = a + 1;
        Some(w)
    }

    #[test]
    fn f_agrees_with_tensor_rule_on_words() {
        let shape = RectangleSeq::new([(2, 1), (1, 2)]);
        for p in enumerate_paths(2, &shape) {
            for a in 1..=2 {
                let got = p.f(a).unwrap().map(|q| q.row_word().0);
                assert_eq!(got, oracle_f(&p.row_word().0, a as Letter), "{p} f_{a}");
            }
        }
    }

    #[test]
    fn two_box_examples() {
        let p = path(1, "2 (x) 1");
        assert!(p.is_highest_weight());
        let q = path(1, "1 (x) 2");
        assert!(!q.is_highest_weight());
        assert_eq!(q.e(1).unwrap(), Some(path(1, "1 (x) 1")));
        assert_eq!(path(1, "1 (x) 1").f(1).unwrap(), Some(q));
    }

    #[test]
    fn splitting_maps_on_the_lifted_example() {
        let lp = path(4, "33/55 ⊗ 23/34/45 ⊗ 23/34");
        let s1 = lp.ls().unwrap();
        assert_eq!(s1, path(4, "3/5 ⊗ 3/5 ⊗ 23/34/45 ⊗ 23/34"));
        let s2 = s1.lb().unwrap();
        assert_eq!(s2, path(4, "5 ⊗ 3 ⊗ 3/5 ⊗ 23/34/45 ⊗ 23/34"));
        let (b, s3) = s2.lh().unwrap();
        assert_eq!(b, 5);
        let (b, s4) = s3.lh().unwrap();
        assert_eq!(b, 3);
        assert_eq!(s4, path(4, "3/5 ⊗ 23/34/45 ⊗ 23/34"));
        assert_eq!(s2.lb_inv().unwrap(), s1);
        assert_eq!(s1.ls_inv().unwrap(), lp);
    }

    #[test]
    fn inverse_splits_reject_bad_merges() {
        assert!(matches!(path(2, "2 ⊗ 1").ls_inv(), Err(Error::Domain { .. })));
        assert!(matches!(path(2, "1 ⊗ 2").lb_inv(), Err(Error::Domain { .. })));
        assert!(matches!(path(2, "12").lh(), Err(Error::Shape { .. })));
    }

    #[test]
    fn index_checks() {
        let p = path(2, "12");
        assert!(matches!(p.f(0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(p.e(3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn ambient_weight_example() {
        // -L1 + 3L2 on rank 3 with area 9
        let w = Weight { fundamental: vec![-1, 3, 0], total_area: 9 };
        assert_eq!(w.ambient(), vec![3, 4, 1, 1]);
    }

    #[test]
    fn enumeration_size() {
        let shape = RectangleSeq::new([(2, 2), (1, 1)]);
        let it = enumerate_paths(3, &shape);
        assert_eq!(it.total(), 80);
        assert_eq!(it.count(), 80);
    }
}
