//! Rectangular 0/1 pictures and placed polyominoes.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// A rectangular 0/1 picture, `n` wide and `m` tall.
///
/// Cell `(x, y)` uses automaton coordinates: `x` grows east, `y` grows north,
/// `(0, 0)` is the south-west corner. Both dimensions are at least 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Picture {
    n: usize,
    m: usize,
    bits: Vec<bool>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PictureError {
    #[error("picture has no rows")]
    Empty,
    #[error("line {line} has length {got}, expected {expected}")]
    Ragged { line: usize, got: usize, expected: usize },
    #[error("invalid character {ch:?} at line {line}, column {col}")]
    BadChar { ch: char, line: usize, col: usize },
    #[error("zero-size picture dimension")]
    ZeroDim,
}

impl Picture {
    pub fn new(n: usize, m: usize, bits: Vec<bool>) -> Picture {
        assert!(n >= 1 && m >= 1, "picture dimensions must be positive");
        assert_eq!(bits.len(), n * m);
        Picture { n, m, bits }
    }

    /// Picture with every bit zero.
    pub fn blank(n: usize, m: usize) -> Picture {
        Picture::new(n, m, vec![false; n * m])
    }

    /// Builds a picture from rows listed north to south, matching file order.
    pub fn from_rows(rows: &[&str]) -> Picture {
        parse_picture(&rows.join("\n")).expect("bad literal picture")
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn height(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> bool {
        debug_assert!(x < self.n && y < self.m);
        self.bits[y * self.n + x]
    }

    /// Reads `(x, y)` treating anything outside the rectangle as 0.
    #[inline]
    pub fn get_i(&self, x: isize, y: isize) -> bool {
        if x < 0 || y < 0 || x >= self.n as isize || y >= self.m as isize {
            false
        } else {
            self.get(x as usize, y as usize)
        }
    }

    pub fn set(&mut self, x: usize, y: usize, v: bool) {
        debug_assert!(x < self.n && y < self.m);
        self.bits[y * self.n + x] = v;
    }

    /// Iterates over the coordinates of all 1-cells.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.m).flat_map(move |y| (0..self.n).filter_map(move |x| self.get(x, y).then_some((x, y))))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// The eight dihedral transforms of the picture, including the identity.
    pub fn dihedral_transforms(&self) -> Vec<Picture> {
        let mut out = Vec::with_capacity(8);
        let mut cur = self.clone();
        for _ in 0..4 {
            out.push(cur.clone());
            out.push(cur.mirror_x());
            cur = cur.rotate90();
        }
        out
    }

    /// Rotation by 90 degrees counterclockwise.
    pub fn rotate90(&self) -> Picture {
        let (n, m) = (self.n, self.m);
        let mut bits = vec![false; n * m];
        for y in 0..m {
            for x in 0..n {
                // (x, y) -> (m-1-y, x) in an m x n picture
                if self.get(x, y) {
                    bits[x * m + (m - 1 - y)] = true;
                }
            }
        }
        Picture { n: m, m: n, bits }
    }

    /// East-west mirror.
    pub fn mirror_x(&self) -> Picture {
        let mut out = Picture::blank(self.n, self.m);
        for (x, y) in self.ones() {
            out.set(self.n - 1 - x, y, true);
        }
        out
    }
}

impl fmt::Debug for Picture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Picture({}x{})[", self.n, self.m)?;
        for y in (0..self.m).rev() {
            if y + 1 < self.m {
                write!(f, "|")?;
            }
            for x in 0..self.n {
                write!(f, "{}", if self.get(x, y) { '1' } else { '0' })?;
            }
        }
        write!(f, "]")
    }
}

/// Parses the text form of a picture.
///
/// Lines over `{0,1}`, first non-comment line is the northmost row. Lines
/// starting with `#` are ignored. All rows must have equal length.
pub fn parse_picture(text: &str) -> Result<Picture, PictureError> {
    let mut rows: Vec<Vec<bool>> = Vec::new();
    let mut expected = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() && rows.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '0' => row.push(false),
                '1' => row.push(true),
                _ => {
                    return Err(PictureError::BadChar { ch, line: lineno + 1, col: col + 1 });
                }
            }
        }
        if rows.is_empty() {
            expected = row.len();
            if expected == 0 {
                return Err(PictureError::ZeroDim);
            }
        } else if row.len() != expected {
            return Err(PictureError::Ragged { line: lineno + 1, got: row.len(), expected });
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(PictureError::Empty);
    }
    let m = rows.len();
    let n = expected;
    let mut bits = vec![false; n * m];
    // first parsed line is the northmost row y = m-1
    for (i, row) in rows.iter().enumerate() {
        let y = m - 1 - i;
        for (x, &b) in row.iter().enumerate() {
            bits[y * n + x] = b;
        }
    }
    Ok(Picture { n, m, bits })
}

/// Renders a picture in the format accepted by [`parse_picture`].
pub fn render_picture(p: &Picture) -> String {
    let mut s = String::with_capacity((p.n + 1) * p.m);
    for y in (0..p.m).rev() {
        for x in 0..p.n {
            s.push(if p.get(x, y) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

/// A finite set of grid cells; the polyomino it denotes is the set up to
/// translation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedPolyomino {
    cells: BTreeSet<(i64, i64)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyominoError {
    #[error("polyomino has no cells")]
    Empty,
    #[error("cells are not 4-connected")]
    Disconnected,
}

impl PlacedPolyomino {
    pub fn new(cells: impl IntoIterator<Item = (i64, i64)>) -> Result<PlacedPolyomino, PolyominoError> {
        let cells: BTreeSet<(i64, i64)> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(PolyominoError::Empty);
        }
        // flood fill from an arbitrary cell
        let start = *cells.iter().next().unwrap();
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some((x, y)) = stack.pop() {
            for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let q = (x + dx, y + dy);
                if cells.contains(&q) && seen.insert(q) {
                    stack.push(q);
                }
            }
        }
        if seen.len() != cells.len() {
            return Err(PolyominoError::Disconnected);
        }
        Ok(PlacedPolyomino { cells })
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.cells.iter().copied()
    }

    /// The picture of the polyomino at the dimensions of its minimal bounding
    /// rectangle; translation-invariant.
    pub fn picture(&self) -> Picture {
        let min_x = self.cells.iter().map(|c| c.0).min().unwrap();
        let max_x = self.cells.iter().map(|c| c.0).max().unwrap();
        let min_y = self.cells.iter().map(|c| c.1).min().unwrap();
        let max_y = self.cells.iter().map(|c| c.1).max().unwrap();
        let n = (max_x - min_x + 1) as usize;
        let m = (max_y - min_y + 1) as usize;
        let mut p = Picture::blank(n, m);
        for &(x, y) in &self.cells {
            p.set((x - min_x) as usize, (y - min_y) as usize, true);
        }
        p
    }
}

/// Builds the picture of a placed polyomino; see [`PlacedPolyomino::picture`].
pub fn picture_of(poly: &PlacedPolyomino) -> Picture {
    poly.picture()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single_cell() {
        let p = parse_picture("1\n").unwrap();
        assert_eq!((p.width(), p.height()), (1, 1));
        assert!(p.get(0, 0));
    }

    #[test]
    fn parse_orientation() {
        // first line is the northmost row
        let p = parse_picture("10\n01\n").unwrap();
        assert!(p.get(0, 1));
        assert!(!p.get(1, 1));
        assert!(!p.get(0, 0));
        assert!(p.get(1, 0));
    }

    #[test]
    fn parse_rejects_ragged() {
        let err = parse_picture("1\n11\n").unwrap_err();
        assert!(matches!(err, PictureError::Ragged { .. }));
    }

    #[test]
    fn parse_rejects_bad_char() {
        let err = parse_picture("1x\n").unwrap_err();
        assert!(matches!(err, PictureError::BadChar { .. }));
    }

    #[test]
    fn parse_rejects_empty() {
        assert_eq!(parse_picture(""), Err(PictureError::Empty));
        assert_eq!(parse_picture("# only a comment\n"), Err(PictureError::Empty));
    }

    #[test]
    fn render_round_trip() {
        let p = Picture::from_rows(&["110", "011"]);
        let q = parse_picture(&render_picture(&p)).unwrap();
        assert_eq!(p, q);
        assert_eq!(render_picture(&parse_picture("1\n").unwrap()), "1\n");
    }

    #[test]
    fn polyomino_picture_translation_invariant() {
        let a = PlacedPolyomino::new([(5, 5)]).unwrap();
        assert_eq!(render_picture(&a.picture()), "1\n");
        let b = PlacedPolyomino::new([(0, 0), (1, 0), (1, 1)]).unwrap();
        let c = PlacedPolyomino::new([(10, -3), (11, -3), (11, -2)]).unwrap();
        assert_eq!(b.picture(), c.picture());
        // 2x2 picture with a single 0 in the north-west
        let p = b.picture();
        assert!(!p.get(0, 1));
        assert!(p.get(0, 0) && p.get(1, 0) && p.get(1, 1));
    }

    #[test]
    fn polyomino_rejects_disconnected() {
        assert_eq!(PlacedPolyomino::new([(0, 0), (1, 1)]).unwrap_err(), PolyominoError::Disconnected);
        assert_eq!(PlacedPolyomino::new([]).unwrap_err(), PolyominoError::Empty);
    }

    #[test]
    fn rotate_and_mirror_shapes() {
        let p = Picture::from_rows(&["10", "11"]);
        let r = p.rotate90();
        assert_eq!((r.width(), r.height()), (2, 2));
        assert_eq!(p.dihedral_transforms().len(), 8);
    }
}
