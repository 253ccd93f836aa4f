//! Rectangular semistandard tableaux and the word combinatorics around them:
//! reading words, row insertion, and the single-hole reverse slide that
//! promotion is built from.

use std::fmt;

use crate::error::{Error, Result};

pub type Letter = u32;

/// A cell of a tableau, `(row, col)` counted from 1 at the top left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A finite word over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat<'a>(words: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(words.into_iter().flat_map(|w| w.0.iter().copied()).collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|&x| x > 9);
        for (i, x) in self.0.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A semistandard tableau of rectangular shape `r x s` with `r, s >= 1`.
///
/// Rows weakly increase, columns strictly increase, entries are positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        check_rectangular(&rows)?;
        let t = Tableau { rows };
        if let Some(msg) = t.semistandard_violation() {
            return Err(Error::InvalidTableau(msg));
        }
        Ok(t)
    }

    /// A single column, entries listed top to bottom.
    pub fn column(entries: &[Letter]) -> Result<Self> {
        Tableau::new(entries.iter().map(|&x| vec![x]).collect())
    }

    /// Glue columns (each listed top to bottom) side by side.
    pub fn from_columns(cols: &[Vec<Letter>]) -> Result<Self> {
        let h = cols.first().map_or(0, |c| c.len());
        if cols.iter().any(|c| c.len() != h) {
            return Err(Error::InvalidTableau("columns of unequal height".into()));
        }
        Tableau::new((0..h).map(|i| cols.iter().map(|c| c[i]).collect()).collect())
    }

    /// Parses the compact `12/23` notation: rows separated by `/`, entries
    /// either single digits or separated by whitespace.
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split('/')
            .map(|row| {
                let row = row.trim();
                if row.contains(char::is_whitespace) {
                    row.split_whitespace()
                        .map(|x| x.parse::<Letter>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
                        .collect::<Result<Vec<_>>>()
                } else {
                    row.chars()
                        .map(|c| {
                            c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad entry {c:?} in {s:?}")))
                        })
                        .collect::<Result<Vec<_>>>()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Letter>> {
        self.rows
    }

    /// Entry at a 1-indexed cell.
    pub fn get(&self, cell: Cell) -> Letter {
        self.rows[cell.row - 1][cell.col - 1]
    }

    /// Column `j` (1-indexed from the left), top to bottom.
    pub fn column_entries(&self, j: usize) -> Vec<Letter> {
        self.rows.iter().map(|r| r[j - 1]).collect()
    }

    pub fn max_entry(&self) -> Letter {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.rows.iter().flatten().filter(|&&x| x == letter).count()
    }

    pub fn map_entries(&self, f: impl Fn(Letter) -> Letter) -> Result<Self> {
        Tableau::new(self.rows.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect())
    }

    /// Rows from bottom to top, each read left to right.
    pub fn row_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Columns from left to right, each read bottom to top.
    pub fn col_word(&self) -> Word {
        let mut w = Vec::with_capacity(self.height() * self.width());
        for j in 0..self.width() {
            for i in (0..self.height()).rev() {
                w.push(self.rows[i][j]);
            }
        }
        Word(w)
    }

    fn semistandard_violation(&self) -> Option<String> {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 {
                    return Some(format!("zero entry at {}", Cell::new(i + 1, j + 1)));
                }
                if j > 0 && row[j - 1] > x {
                    return Some(format!("row {} decreases at column {}", i + 1, j + 1));
                }
                if i > 0 && self.rows[i - 1][j] >= x {
                    return Some(format!("column {} not strict at row {}", j + 1, i + 1));
                }
            }
        }
        None
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() > 9;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, x) in row.iter().enumerate() {
                if wide && j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

fn check_rectangular<T>(rows: &[Vec<T>]) -> Result<()> {
    if rows.is_empty() || rows[0].is_empty() {
        return Err(Error::InvalidTableau("empty shape".into()));
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::InvalidTableau("rows of unequal length".into()));
    }
    Ok(())
}

/// The insertion tableau of a word, as a list of weakly increasing rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PSymbol(pub Vec<Vec<Letter>>);

impl PSymbol {
    pub fn shape(&self) -> Vec<usize> {
        self.0.iter().map(Vec::len).collect()
    }
}

/// Schensted row insertion of every letter of `word`, left to right.
pub fn insert(word: &Word) -> PSymbol {
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    for &x in &word.0 {
        let mut x = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            // first entry strictly larger than x gets bumped
            let pos = row.partition_point(|&y| y <= x);
            if pos == row.len() {
                row.push(x);
                placed = true;
                break;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    PSymbol(rows)
}

pub fn knuth_equivalent(a: &Word, b: &Word) -> bool {
    insert(a) == insert(b)
}

/// Which neighbour moves into the hole when the cell above and the cell to
/// the left carry equal entries. Only `Above` keeps the result semistandard.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieRule {
    #[default]
    Above,
    Left,
}

/// The cells visited by the hole, excluding its starting cell.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SlideRoute(pub Vec<Cell>);

/// A rectangular filling with one designated empty cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Punctured {
    rows: Vec<Vec<Letter>>,
    hole: Cell,
}

impl Punctured {
    /// `rows` must be rectangular and `hole` inside it; the entry stored at
    /// the hole is ignored.
    pub fn new(rows: Vec<Vec<Letter>>, hole: Cell) -> Result<Self> {
        check_rectangular(&rows)?;
        if hole.row == 0 || hole.col == 0 || hole.row > rows.len() || hole.col > rows[0].len() {
            return Err(Error::InvalidTableau(format!("hole {hole} outside the rectangle")));
        }
        let mut rows = rows;
        rows[hole.row - 1][hole.col - 1] = 0;
        Ok(Punctured { rows, hole })
    }

    pub fn hole(&self) -> Cell {
        self.hole
    }

    pub fn get(&self, cell: Cell) -> Option<Letter> {
        if cell == self.hole || cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    /// Put `letter` into the hole. Fails if the result is not semistandard.
    pub fn fill(mut self, letter: Letter) -> Result<Tableau> {
        self.rows[self.hole.row - 1][self.hole.col - 1] = letter;
        Tableau::new(self.rows)
    }
}

impl fmt::Display for Punctured {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, x) in row.iter().enumerate() {
                if Cell::new(i + 1, j + 1) == self.hole {
                    f.write_str("·")?;
                } else {
                    write!(f, "{x}")?;
                }
            }
        }
        Ok(())
    }
}

/// Empty the bottom-right corner of `t` and slide the hole to the top left.
pub fn reverse_slide(t: &Tableau) -> (Punctured, SlideRoute) {
    let corner = Cell::new(t.height(), t.width());
    reverse_slide_from(t, corner, TieRule::Above).expect("corner lies inside the tableau")
}

/// Empty `start` and slide: the hole repeatedly swaps with the larger of its
/// upper and left neighbours, resolving equal entries by `tie`, until it
/// reaches the top-left cell.
pub fn reverse_slide_from(t: &Tableau, start: Cell, tie: TieRule) -> Result<(Punctured, SlideRoute)> {
    let mut p = Punctured::new(t.rows.clone(), start)?;
    let mut route = Vec::new();
    loop {
        let Cell { row: i, col: j } = p.hole;
        let above = (i > 1).then(|| p.rows[i - 2][j - 1]);
        let left = (j > 1).then(|| p.rows[i - 1][j - 2]);
        let next = match (above, left) {
            (None, None) => break,
            (Some(_), None) => Cell::new(i - 1, j),
            (None, Some(_)) => Cell::new(i, j - 1),
            (Some(a), Some(l)) => {
                if a > l || (a == l && tie == TieRule::Above) {
                    Cell::new(i - 1, j)
                } else {
                    Cell::new(i, j - 1)
                }
            }
        };
        p.rows[i - 1][j - 1] = p.rows[next.row - 1][next.col - 1];
        p.rows[next.row - 1][next.col - 1] = 0;
        p.hole = next;
        route.push(next);
    }
    Ok((p, SlideRoute(route)))
}

/// All semistandard tableaux of shape `r x s` over `1..=max`, ordered
/// lexicographically by row word.
pub fn rectangular_tableaux(r: usize, s: usize, max: Letter) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut cur = vec![vec![0; s]; r];
    fill_cells(&mut cur, 0, r, s, max, &mut out);
    out.sort_by_cached_key(|t| t.row_word());
    out
}

fn fill_cells(cur: &mut Vec<Vec<Letter>>, k: usize, r: usize, s: usize, max: Letter, out: &mut Vec<Tableau>) {
    if k == r * s {
        out.push(Tableau { rows: cur.clone() });
        return;
    }
    let (i, j) = (k / s, k % s);
    let mut lo = 1;
    if j > 0 {
        lo = lo.max(cur[i][j - 1]);
    }
    if i > 0 {
        lo = lo.max(cur[i - 1][j] + 1);
    }
    // leave room for the strictly increasing column below
    let hi = max.saturating_sub((r - 1 - i) as Letter);
    for x in lo..=hi {
        cur[i][j] = x;
        fill_cells(cur, k + 1, r, s, max, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        Tableau::parse(s).unwrap()
    }

    #[test]
    fn reading_words_of_a_path() {
        let factors = [t("12/23"), t("12"), t("1/2/4")];
        let row = Word::concat(&factors.iter().map(Tableau::row_word).collect::<Vec<_>>());
        let col = Word::concat(&factors.iter().map(Tableau::col_word).collect::<Vec<_>>());
        assert_eq!(row.to_string(), "231212421");
        assert_eq!(col.to_string(), "213212421");
    }

    #[test]
    fn slide_route_matches_worked_example() {
        let s = t("1223/2355/4466/5677");
        let (p, route) = reverse_slide(&s);
        assert_eq!(p.to_string(), "·123/2235/4456/5667");
        let expect = [(4, 3), (3, 3), (2, 3), (2, 2), (1, 2), (1, 1)];
        assert_eq!(route.0, expect.iter().map(|&(i, j)| Cell::new(i, j)).collect::<Vec<_>>());
    }

    #[test]
    fn slide_second_example() {
        let (p, _) = reverse_slide(&t("2345/3556/4777/6888"));
        assert_eq!(p.to_string(), "·245/3356/4577/6788");
    }

    #[test]
    fn left_tie_rule_can_break_semistandardness() {
        let s = t("1223/2355/4466/5677");
        let (p, _) = reverse_slide_from(&s, Cell::new(4, 4), TieRule::Left).unwrap();
        assert!(p.fill(1).is_err());
    }

    #[test]
    fn rejects_bad_tableaux() {
        assert!(Tableau::parse("21").is_err());
        assert!(Tableau::parse("12/12").is_err());
        assert!(Tableau::parse("12/3").is_err());
        assert!(Tableau::parse("10 11/12 13").is_ok());
    }

    #[test]
    fn insertion_basics() {
        let p = insert(&Word(vec![2, 3, 1, 2, 1, 2, 4, 2, 1]));
        assert_eq!(p.shape().iter().sum::<usize>(), 9);
        assert!(knuth_equivalent(&Word(vec![2, 1, 3]), &Word(vec![2, 3, 1])));
        assert!(!knuth_equivalent(&Word(vec![1, 2, 3]), &Word(vec![3, 2, 1])));
    }

    #[test]
    fn tableau_counts() {
        // hook-content formula values
        assert_eq!(rectangular_tableaux(2, 2, 4).len(), 20);
        assert_eq!(rectangular_tableaux(3, 2, 4).len(), 10);
        assert_eq!(rectangular_tableaux(1, 3, 3).len(), 10);
        assert_eq!(rectangular_tableaux(4, 1, 3).len(), 0);
    }
}
