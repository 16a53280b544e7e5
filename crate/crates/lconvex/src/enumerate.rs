//! Exhaustive enumeration of polyomino pictures at desk scale.
//!
//! Two routes, kept independent so they can cross-check each other:
//!
//! * [`all_bit_grids`] walks every one of the `2^(n*m)` bit grids of one
//!   size; filtering those with [`crate::convex::is_polyomino_picture`] is the
//!   correctness anchor for small sizes.
//! * [`for_each_polyomino_picture`] grows 4-connected sets cell by cell so
//!   that every connected subset of the box is visited exactly once (frontier
//!   enumeration with a minimal-cell root), then keeps the border-touching
//!   ones. This is the speed path for boxes where `2^(n*m)` is out of reach.

use crate::picture::Picture;
use thiserror::Error;

/// Largest box side accepted by the enumeration entry points.
pub const MAX_SIDE: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("requested bound {0} exceeds the supported desk-scale limit {MAX_SIDE}")]
    BoundTooLarge(usize),
    #[error("bounds must be at least 1")]
    ZeroBound,
}

/// Iterator over every bit grid of one fixed size (for `n*m <= 20`).
pub fn all_bit_grids(n: usize, m: usize) -> impl Iterator<Item = Picture> {
    assert!(n * m <= 20, "2^(n*m) enumeration is only for tiny grids");
    (0u32..(1u32 << (n * m))).map(move |mask| {
        let bits = (0..n * m).map(|i| mask >> i & 1 == 1).collect();
        Picture::new(n, m, bits)
    })
}

/// Calls `f` for every picture of size exactly `n x m` whose 1-cells form a
/// polyomino picture (4-connected, touching all four borders). No duplicates.
pub fn for_each_polyomino_picture_of_size<F: FnMut(&Picture)>(n: usize, m: usize, f: &mut F) {
    let total = n * m;
    let mut reached = vec![false; total];
    let mut poly: Vec<usize> = Vec::new();
    let mut border = BorderCounts::default();
    let mut picture = Picture::blank(n, m);
    for root in 0..total {
        // sets whose minimal cell (row-major from the south-west) is `root`
        for c in 0..root {
            reached[c] = true;
        }
        reached[root] = true;
        grow(n, m, vec![root], &mut reached, &mut poly, &mut border, &mut picture, f);
        for c in 0..=root {
            reached[c] = false;
        }
        debug_assert!(poly.is_empty());
    }
}

#[derive(Default)]
struct BorderCounts {
    w: usize,
    e: usize,
    s: usize,
    n: usize,
}

#[allow(clippy::too_many_arguments)]
fn grow<F: FnMut(&Picture)>(
    n: usize,
    m: usize,
    untried: Vec<usize>,
    reached: &mut Vec<bool>,
    poly: &mut Vec<usize>,
    border: &mut BorderCounts,
    picture: &mut Picture,
    f: &mut F,
) {
    let mut untried = untried;
    while let Some(c) = untried.pop() {
        let (x, y) = (c % n, c / n);
        poly.push(c);
        picture.set(x, y, true);
        if x == 0 {
            border.w += 1;
        }
        if x == n - 1 {
            border.e += 1;
        }
        if y == 0 {
            border.s += 1;
        }
        if y == m - 1 {
            border.n += 1;
        }
        if border.w > 0 && border.e > 0 && border.s > 0 && border.n > 0 {
            f(picture);
        }
        let mut added = Vec::new();
        let mut consider = |idx: usize, reached: &mut Vec<bool>, added: &mut Vec<usize>| {
            if !reached[idx] {
                reached[idx] = true;
                added.push(idx);
            }
        };
        if x > 0 {
            consider(c - 1, reached, &mut added);
        }
        if x + 1 < n {
            consider(c + 1, reached, &mut added);
        }
        if y > 0 {
            consider(c - n, reached, &mut added);
        }
        if y + 1 < m {
            consider(c + n, reached, &mut added);
        }
        let mut child = untried.clone();
        child.extend(added.iter().copied());
        grow(n, m, child, reached, poly, border, picture, f);
        for idx in added {
            reached[idx] = false;
        }
        poly.pop();
        picture.set(x, y, false);
        if x == 0 {
            border.w -= 1;
        }
        if x == n - 1 {
            border.e -= 1;
        }
        if y == 0 {
            border.s -= 1;
        }
        if y == m - 1 {
            border.n -= 1;
        }
        // `c` stays reached for the remaining iterations at this level: every
        // set containing it has already been visited through its branch.
    }
}

/// Calls `f` for every polyomino picture with width `<= max_w` and height
/// `<= max_h`, each exactly once.
pub fn for_each_polyomino_picture<F: FnMut(&Picture)>(
    max_w: usize,
    max_h: usize,
    mut f: F,
) -> Result<(), EnumerateError> {
    check_bounds(max_w, max_h)?;
    for n in 1..=max_w {
        for m in 1..=max_h {
            for_each_polyomino_picture_of_size(n, m, &mut f);
        }
    }
    Ok(())
}

/// Collects the enumeration of [`for_each_polyomino_picture`]; intended for
/// small bounds where the full list fits comfortably in memory.
pub fn enumerate_polyomino_pictures(max_w: usize, max_h: usize) -> Result<Vec<Picture>, EnumerateError> {
    let mut out = Vec::new();
    for_each_polyomino_picture(max_w, max_h, |p| out.push(p.clone()))?;
    Ok(out)
}

fn check_bounds(max_w: usize, max_h: usize) -> Result<(), EnumerateError> {
    if max_w == 0 || max_h == 0 {
        return Err(EnumerateError::ZeroBound);
    }
    for b in [max_w, max_h] {
        if b > MAX_SIDE {
            return Err(EnumerateError::BoundTooLarge(b));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::is_polyomino_picture;

    #[test]
    fn smallest_cases_by_hand() {
        let one = enumerate_polyomino_pictures(1, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0], Picture::from_rows(&["1"]));

        let two = enumerate_polyomino_pictures(2, 1).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&Picture::from_rows(&["1"])));
        assert!(two.contains(&Picture::from_rows(&["11"])));
    }

    #[test]
    fn growth_matches_naive_filter_up_to_3x3() {
        for n in 1..=3usize {
            for m in 1..=3usize {
                let naive: Vec<Picture> =
                    all_bit_grids(n, m).filter(is_polyomino_picture_ref).collect();
                let mut grown = Vec::new();
                for_each_polyomino_picture_of_size(n, m, &mut |p| grown.push(p.clone()));
                assert_eq!(grown.len(), naive.len(), "count mismatch at {n}x{m}");
                let set: std::collections::HashSet<Vec<u8>> =
                    naive.iter().map(encode).collect();
                for p in &grown {
                    assert!(set.contains(&encode(p)), "unexpected picture {p:?}");
                }
                let unique: std::collections::HashSet<Vec<u8>> =
                    grown.iter().map(encode).collect();
                assert_eq!(unique.len(), grown.len(), "duplicates at {n}x{m}");
            }
        }
    }

    fn is_polyomino_picture_ref(p: &Picture) -> bool {
        is_polyomino_picture(p)
    }

    fn encode(p: &Picture) -> Vec<u8> {
        crate::picture::render_picture(p).into_bytes()
    }

    #[test]
    fn bounds_are_enforced()
    {
        assert!(enumerate_polyomino_pictures(MAX_SIDE + 1, 2).is_err());
        assert!(enumerate_polyomino_pictures(0, 2).is_err());
    }
}
