//! Generic synchronous 2D cellular automaton over the von Neumann
//! neighborhood, simulated on a finite arena embedded in an infinite
//! quiescent background.
//!
//! The arena is the picture bounding box plus a halo of fixed width; a
//! correct rule never activates the halo, and [`Configuration::halo_is_quiescent`]
//! makes that checkable per step. Reads outside the arena return the
//! quiescent state.

use crate::picture::Picture;
use rayon::prelude::*;

/// Grid coordinate; `x` grows east, `y` grows north.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coord {
    pub x: isize,
    pub y: isize,
}

/// The five von Neumann offsets (Manhattan norm at most 1).
pub const VON_NEUMANN: [(isize, isize); 5] = [(0, 0), (0, 1), (0, -1), (1, 0), (-1, 0)];

/// A local transition rule: five neighbor states in, one state out.
///
/// Implementations must be pure; the engine checks the quiescent fixed point
/// when it is constructed.
pub trait Rule: Sync {
    type State: Clone + PartialEq + Send + Sync;

    fn quiescent(&self) -> Self::State;

    /// Order: center, north, south, east, west.
    fn apply(
        &self,
        c: &Self::State,
        n: &Self::State,
        s: &Self::State,
        e: &Self::State,
        w: &Self::State,
    ) -> Self::State;
}

/// Real time for the 2D von Neumann neighborhood: the earliest step at which
/// the origin may depend on the whole `n x m` input.
pub fn real_time(n: usize, m: usize) -> usize {
    assert!(n >= 1 && m >= 1);
    n + m - 2
}

/// Finite rectangular window of an infinite quiescent configuration.
///
/// Cells `[-halo, n-1+halo] x [-halo, m-1+halo]` are stored; everything else
/// reads as quiescent.
#[derive(Clone, PartialEq)]
pub struct Configuration<S> {
    n: usize,
    m: usize,
    halo: usize,
    cells: Vec<S>,
    quiescent: S,
}

impl<S: Clone + PartialEq + Send + Sync> Configuration<S> {
    /// Builds the picture configuration: cell `(x, y)` of the picture is
    /// embedded through `embed`, all other cells are quiescent.
    pub fn from_picture(p: &Picture, halo: usize, quiescent: S, embed: impl Fn(bool) -> S) -> Self {
        assert!(halo >= 1, "halo width must be at least 1");
        let (n, m) = (p.width(), p.height());
        let w = n + 2 * halo;
        let h = m + 2 * halo;
        let mut cells = vec![quiescent.clone(); w * h];
        for y in 0..m {
            for x in 0..n {
                cells[(y + halo) * w + (x + halo)] = embed(p.get(x, y));
            }
        }
        Configuration { n, m, halo, cells, quiescent }
    }

    /// An all-quiescent arena of the given picture dimensions.
    pub fn quiescent_arena(n: usize, m: usize, halo: usize, quiescent: S) -> Self {
        let w = n + 2 * halo;
        let h = m + 2 * halo;
        Configuration { n, m, halo, cells: vec![quiescent.clone(); w * h], quiescent }
    }

    pub fn picture_width(&self) -> usize {
        self.n
    }

    pub fn picture_height(&self) -> usize {
        self.m
    }

    pub fn halo(&self) -> usize {
        self.halo
    }

    fn stride(&self) -> usize {
        self.n + 2 * self.halo
    }

    /// Reads cell `(x, y)` in picture coordinates; quiescent outside the
    /// arena.
    pub fn get(&self, x: isize, y: isize) -> &S {
        let h = self.halo as isize;
        if x < -h || y < -h || x >= self.n as isize + h || y >= self.m as isize + h {
            &self.quiescent
        } else {
            let ix = (x + h) as usize;
            let iy = (y + h) as usize;
            &self.cells[iy * self.stride() + ix]
        }
    }

    /// Overwrites one arena cell; panics outside the arena. Intended for
    /// tests that inject states directly.
    pub fn set(&mut self, x: isize, y: isize, v: S) {
        let h = self.halo as isize;
        assert!(x >= -h && y >= -h && x < self.n as isize + h && y < self.m as isize + h);
        let ix = (x + h) as usize;
        let iy = (y + h) as usize;
        let stride = self.stride();
        self.cells[iy * stride + ix] = v;
    }

    /// True when every halo cell equals the quiescent state.
    pub fn halo_is_quiescent(&self) -> bool {
        let h = self.halo as isize;
        for y in -h..self.m as isize + h {
            for x in -h..self.n as isize + h {
                let in_box = x >= 0 && y >= 0 && x < self.n as isize && y < self.m as isize;
                if !in_box && self.get(x, y) != &self.quiescent {
                    return false;
                }
            }
        }
        true
    }

    /// All arena coordinates, halo included.
    pub fn coords(&self) -> impl Iterator<Item = (isize, isize)> {
        let h = self.halo as isize;
        let (n, m) = (self.n as isize, self.m as isize);
        (-h..m + h).flat_map(move |y| (-h..n + h).map(move |x| (x, y)))
    }
}

/// Engine binding a rule to the synchronous sweep.
pub struct Engine<R: Rule> {
    rule: R,
}

impl<R: Rule> Engine<R> {
    /// Wraps a rule, checking once that the all-quiescent neighborhood maps
    /// to the quiescent state.
    pub fn new(rule: R) -> Self {
        let q = rule.quiescent();
        let out = rule.apply(&q, &q, &q, &q, &q);
        assert!(out == q, "rule does not fix the quiescent state");
        Engine { rule }
    }

    pub fn rule(&self) -> &R {
        &self.rule
    }

    /// One synchronous step: all reads precede all writes.
    pub fn step(&self, c: &Configuration<R::State>) -> Configuration<R::State> {
        let mut next = c.clone();
        let h = c.halo as isize;
        let stride = c.stride();
        for y in -h..c.m as isize + h {
            for x in -h..c.n as isize + h {
                let v = self.rule.apply(c.get(x, y), c.get(x, y + 1), c.get(x, y - 1), c.get(x + 1, y), c.get(x - 1, y));
                let ix = (x + h) as usize;
                let iy = (y + h) as usize;
                next.cells[iy * stride + ix] = v;
            }
        }
        next
    }

    /// Same sweep partitioned across worker threads; bit-identical to
    /// [`Engine::step`].
    pub fn step_par(&self, c: &Configuration<R::State>) -> Configuration<R::State> {
        let h = c.halo as isize;
        let stride = c.stride();
        let rows = c.m as isize + 2 * h;
        let mut next = c.clone();
        next.cells
            .par_chunks_mut(stride)
            .enumerate()
            .take(rows as usize)
            .for_each(|(iy, row)| {
                let y = iy as isize - h;
                for (ix, slot) in row.iter_mut().enumerate() {
                    let x = ix as isize - h;
                    *slot = self.rule.apply(
                        c.get(x, y),
                        c.get(x, y + 1),
                        c.get(x, y - 1),
                        c.get(x + 1, y),
                        c.get(x - 1, y),
                    );
                }
            });
        next
    }

    /// Runs `t` steps, invoking `observe(step_index, configuration)` after
    /// every step (and once for the initial configuration with index 0).
    pub fn run_with<F>(&self, c: Configuration<R::State>, t: usize, mut observe: F) -> Configuration<R::State>
    where
        F: FnMut(usize, &Configuration<R::State>),
    {
        observe(0, &c);
        let mut cur = c;
        for k in 1..=t {
            cur = self.step(&cur);
            observe(k, &cur);
        }
        cur
    }

    /// Runs `t` steps, recording the requested trace layers.
    pub fn run(
        &self,
        c: Configuration<R::State>,
        t: usize,
        layers: &[TraceLayer<R::State>],
    ) -> (Configuration<R::State>, Vec<TraceFrame>) {
        let mut frames = Vec::new();
        let out = self.run_with(c, t, |k, cfg| {
            for layer in layers {
                frames.push(TraceFrame::capture(k, layer, cfg));
            }
        });
        (out, frames)
    }
}

/// A named projection of one state field to printable symbols.
pub struct TraceLayer<S> {
    pub name: &'static str,
    /// `symbol=meaning` pairs printed in the legend header.
    pub legend: &'static str,
    pub project: Box<dyn Fn(&S) -> char + Sync>,
}

/// One captured layer at one step; rows run north to south like picture
/// files.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceFrame {
    pub t: usize,
    pub layer: &'static str,
    pub grid: Vec<String>,
}

impl TraceFrame {
    fn capture<S: Clone + PartialEq + Send + Sync>(t: usize, layer: &TraceLayer<S>, c: &Configuration<S>) -> TraceFrame {
        let h = c.halo as isize;
        let mut grid = Vec::new();
        let mut y = c.m as isize + h - 1;
        while y >= -h {
            let mut row = String::new();
            for x in -h..c.n as isize + h {
                row.push((layer.project)(c.get(x, y)));
            }
            grid.push(row);
            y -= 1;
        }
        TraceFrame { t, layer: layer.layer_name(), grid }
    }
}

impl<S> TraceLayer<S> {
    fn layer_name(&self) -> &'static str {
        self.name
    }
}

/// Serializes frames of one layer in the trace file format:
/// a header line, then per step `t=<k>` and the arena rows north to south,
/// with a blank line between steps.
pub fn write_trace(layer: &str, legend: &str, n: usize, m: usize, halo: usize, frames: &[TraceFrame]) -> String {
    let mut out = String::new();
    out.push_str(&format!("# trace layer={layer} n={n} m={m} halo={halo}\n"));
    if !legend.is_empty() {
        out.push_str(&format!("# legend {legend}\n"));
    }
    for f in frames.iter().filter(|f| f.layer == layer) {
        out.push_str(&format!("t={}\n", f.t));
        for row in &f.grid {
            out.push_str(row);
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Toy rule used by the engine tests: a cell becomes 1 when any von
    /// Neumann neighbor is 1 (quiescent = 0 outside the arena, but arena
    /// cells use a separate "inert" value so halo stays clean).
    struct Spread;

    impl Rule for Spread {
        type State = u8; // 0 = quiescent, 1 = idle, 2 = lit

        fn quiescent(&self) -> u8 {
            0
        }

        fn apply(&self, c: &u8, n: &u8, s: &u8, e: &u8, w: &u8) -> u8 {
            if *c == 0 {
                return 0;
            }
            if *c == 2 || *n == 2 || *s == 2 || *e == 2 || *w == 2 {
                2
            } else {
                1
            }
        }
    }

    fn lit_config(n: usize, m: usize, lit: &[(isize, isize)]) -> Configuration<u8> {
        let p = Picture::blank(n, m);
        let mut c = Configuration::from_picture(&p, 1, 0u8, |_| 1u8);
        for &(x, y) in lit {
            c.set(x, y, 2);
        }
        c
    }

    #[test]
    fn real_time_values() {
        assert_eq!(real_time(1, 1), 0);
        assert_eq!(real_time(4, 3), 5);
        assert_eq!(real_time(1, 7), 6);
    }

    #[test]
    fn quiescent_stays_quiescent() {
        let engine = Engine::new(Spread);
        let c = Configuration::quiescent_arena(3, 3, 1, 0u8);
        let d = engine.step(&c);
        assert_eq!(c, d);
    }

    #[test]
    fn zero_steps_is_identity_and_runs_compose() {
        let engine = Engine::new(Spread);
        let c = lit_config(5, 4, &[(2, 2)]);
        let (same, _) = engine.run(c.clone(), 0, &[]);
        assert!(same == c);
        let (ab, _) = engine.run(c.clone(), 5, &[]);
        let (a, _) = engine.run(c, 2, &[]);
        let (then_b, _) = engine.run(a, 3, &[]);
        assert!(ab == then_b);
    }

    #[test]
    fn parallel_step_matches_sequential() {
        let engine = Engine::new(Spread);
        let mut c = lit_config(9, 6, &[(0, 0), (7, 3)]);
        for _ in 0..6 {
            let s = engine.step(&c);
            let p = engine.step_par(&c);
            assert!(s == p);
            c = s;
        }
    }

    #[test]
    fn spread_keeps_halo_quiescent() {
        let engine = Engine::new(Spread);
        let mut c = lit_config(4, 4, &[(1, 1)]);
        for _ in 0..10 {
            c = engine.step(&c);
            assert!(c.halo_is_quiescent());
        }
    }

    #[test]
    fn trace_format_shape() {
        let engine = Engine::new(Spread);
        let c = lit_config(3, 2, &[(0, 0)]);
        let layer = TraceLayer {
            name: "lit",
            legend: ".=quiescent -=idle #=lit",
            project: Box::new(|s: &u8| match s {
                0 => '.',
                1 => '-',
                _ => '#',
            }),
        };
        let (_, frames) = engine.run(c, 1, &[layer]);
        let text = write_trace("lit", ".=quiescent -=idle #=lit", 3, 2, 1, &frames);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("# trace layer=lit n=3 m=2 halo=1"));
        assert_eq!(lines.next(), Some("# legend .=quiescent -=idle #=lit"));
        assert_eq!(lines.next(), Some("t=0"));
        // arena rows are (m + 2 halo) = 4 long, (n + 2 halo) = 5 wide
        let row = lines.next().unwrap();
        assert_eq!(row.len(), 5);
    }

    #[test]
    fn translation_equivariance_of_step() {
        // embed the same pattern at two offsets inside a large arena and
        // compare the evolutions cellwise
        let engine = Engine::new(Spread);
        let mut a = lit_config(10, 10, &[(2, 3), (3, 3)]);
        let mut b = lit_config(10, 10, &[(3, 4), (4, 4)]);
        for _ in 0..3 {
            a = engine.step(&a);
            b = engine.step(&b);
        }
        for y in 0..8 {
            for x in 0..8 {
                // interior far from both boundaries shifts by (1, 1)
                if (1..=7).contains(&x) && (1..=7).contains(&y) {
                    assert_eq!(a.get(x, y), b.get(x + 1, y + 1), "at {x},{y}");
                }
            }
        }
    }
}
