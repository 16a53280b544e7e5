//! Cell state of the recognizer automaton.
//!
//! One active cell carries four cooperating layers:
//!
//! * a static layer: the input bit (which never moves) plus converging
//!   row/column summaries that perform the preliminary shape checks;
//! * a compression layer: content slices travel west, then the settled
//!   column pairs travel south, so that each arena cell in the south-west
//!   quadrant ends up holding a 2x2 block of original cells together with
//!   per-cell direction information;
//! * a main layer: the corner signals, moving counter words and zone checks,
//!   run on the compressed blocks at two virtual steps per tick with
//!   per-cell clocks that start asynchronously as soon as the local block
//!   and its neighbors are ready;
//! * an error layer: origin-bound error flags routed greedily west, then
//!   south, one arena cell per tick, and the reject latch at the origin.
//!
//! The full state product is finite and independent of the input size; the
//! only unbounded quantity of the construction, the counter value, is spread
//! across cells as a word of `Unit` fragments.

/// Summary of one row segment `[x .. east edge covered so far]`, converging
/// westward one cell per step. Grows its coverage eastward by one original
/// cell per step until it covers the east edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RowSum {
    /// Runs of 1s seen in the covered range, saturating at 2.
    pub runs: u8,
    /// Covered range reaches the east border of the picture.
    pub complete: bool,
    /// First covered cell is a 1.
    pub starts_in_run: bool,
    /// The run starting at the first covered cell ends inside the coverage.
    pub lead_closed: bool,
    /// Some cell of that leading run has a 1 directly north.
    pub lead_north: bool,
    /// Some cell of that leading run has a 1 directly south.
    pub lead_south: bool,
    /// No 1 anywhere in the covered range.
    pub all_zero: bool,
}

/// Column analogue of [`RowSum`]; coverage grows northward, the summary
/// converges southward.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ColSum {
    pub runs: u8,
    pub complete: bool,
    pub starts_in_run: bool,
    pub lead_closed: bool,
    /// Some cell of the leading run has a 1 directly east.
    pub lead_east: bool,
    /// Some cell of the leading run has a 1 directly west.
    pub lead_west: bool,
    pub all_zero: bool,
}

/// Horizontal compression content: up to two column slices, west slice
/// first. A slice is just the input bit of one original column at this row
/// until the direction marks are attached.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct HContent {
    pub count: u8,
    pub bits: [bool; 2],
    /// 1 exists strictly west in this original row, per slice; valid once
    /// `winfo_done`.
    pub west_info: [bool; 2],
    pub winfo_done: bool,
}

/// Vertical compression content: up to two settled row pairs stacked, south
/// row first.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct VContent {
    pub count: u8,
    pub rows: [HContent; 2],
}

/// Frozen per-original-cell geometry inside a completed block.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SubGeo {
    pub bit: bool,
    /// 1 exists strictly west / east / south / north in the same row/column.
    pub w_info: bool,
    pub e_info: bool,
    pub s_info: bool,
    pub n_info: bool,
    /// Run border roles (only meaningful on 1-cells).
    pub row_west: bool,
    pub row_east: bool,
    pub col_south: bool,
    pub col_north: bool,
}

/// A completed 2x2 block of original cells.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Block {
    /// `sub[sy][sx]` is original cell `(2i + sx, 2j + sy)`.
    pub sub: [[SubGeo; 2]; 2],
    /// Number of valid original columns (1 or 2) and rows in this block.
    pub cols: u8,
    pub rows: u8,
    /// Per original column: this column starts / ends a horizontal segment
    /// of the polyomino's southern border. `None` until the flag has climbed
    /// up from the south border cell.
    pub seg: [Option<SegFlags>; 2],
    /// Direction info derived (east/north neighbors inspected).
    pub derived: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SegFlags {
    pub west: bool,
    pub east: bool,
}

/// One fragment of a moving counter word. Words travel head first at one
/// cell per virtual step; the least significant bit is at the head, the `end`
/// marker trails last. `floored` rides on the end marker once a borrow ran
/// off the word, which is how "decrementing zero keeps zero" is remembered.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Unit {
    pub bit: bool,
    pub head: bool,
    pub end: bool,
    pub floored: bool,
}

/// Westward corner walker: performs the zone-B check at the row's west end
/// and drives the condition-(c) machinery on the way.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Walker {
    /// Still owes a v1 emission (no segment border column seen yet).
    pub v1_pending: bool,
    /// Saw a polyomino cell to the north before emitting v1: another corner
    /// west owns this southern segment, so the condition-(c) role is dropped.
    pub c_dead: bool,
}

/// Zero test running at a box-bottom cell: word fragments arrive one per
/// virtual step and are folded into the accumulator until the end marker.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Test {
    pub nonzero: bool,
    pub floored: bool,
}

/// Signals of one diagonal system (NE corners use west/south movement; the
/// NW system is its east-west mirror).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct DirCell {
    /// Zone-A checker descending the corner's column.
    pub a_sig: bool,
    pub walker: Option<Walker>,
    /// Segment signal descending toward the southern border; spawns the h2.
    pub v1: bool,
    /// Word head descending the row-end column; `Some(slot)` names which
    /// vertical word slot it drives.
    pub v2: Option<u8>,
    /// Westward (mirrored: eastward) border signal on a southern segment
    /// row. Merged freely: one flag per cell.
    pub h2: bool,
    /// Persistent mark on the cell where a v2 was produced, with the word
    /// slot the turning units must enter.
    pub src: Option<u8>,
    /// Horizontal word fragment traveling with/behind the walker.
    pub hword: Option<Unit>,
    /// Turn pipeline at the source cell (two stages deep).
    pub stage_a: Option<Unit>,
    pub stage_b: Option<Unit>,
    /// Vertical word fragments; two slots so that overlapping words from
    /// nearby corners sharing a column keep distinct identities.
    pub vword: [Option<Unit>; 2],
    /// Pending carry (horizontal leg) at this cell, applied to the next
    /// arriving fragment.
    pub hcarry: bool,
    /// A just-born word still owes its end marker; the cell the head leaves
    /// becomes the end.
    pub end_pending: bool,
    /// Same, for the conversion of an end marker into a bit by a carry.
    pub end_insert: bool,
    /// Pending borrows per vertical slot.
    pub vborrow: [bool; 2],
    /// The walker occupied this cell one virtual step ago (counting trail).
    pub trail: bool,
    /// Zero tests in progress per vertical slot (box-bottom cells only).
    pub test: [Option<Test>; 2],
}

/// Virtual state of one original cell.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct VCell {
    pub ne: DirCell,
    pub nw: DirCell,
}

/// Virtual state of a block plus an error bit set by failed checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MainBlock {
    pub sub: [[VCell; 2]; 2],
    pub error: bool,
}

impl Default for MainBlock {
    fn default() -> Self {
        MainBlock { sub: [[VCell::default(); 2]; 2], error: false }
    }
}

/// The asynchronous virtual clock of a booted block. Neighbors may lag or
/// lead by one virtual tick, so the previous state is kept for them.
#[derive(Clone, PartialEq, Debug)]
pub struct Main {
    /// Virtual tick counter modulo 4 (relative lags are at most 1).
    pub clock: u8,
    pub curr: MainBlock,
    pub prev: MainBlock,
}

/// One arena cell of the recognizer.
#[derive(Clone, PartialEq, Debug)]
pub enum CellState {
    Quiescent,
    Active(Box<Active>),
}

#[derive(Clone, PartialEq, Debug)]
pub struct Active {
    pub bit: bool,
    /// First step done: summaries and edge knowledge are initialized.
    pub started: bool,

    // preliminary check
    pub row: Option<RowSum>,
    pub col: Option<ColSum>,

    // compression
    pub h: HContent,
    pub h_settled: bool,
    pub v: VContent,
    pub v_settled: bool,
    /// South-looking direction info attached to `v.rows`; the per-column
    /// accumulators of the northward information wave.
    pub s_info: [[bool; 2]; 2],
    pub sinfo_done: bool,
    pub block: Option<Block>,

    // main layer
    pub main: Option<Main>,

    // decision layer
    pub error: bool,
    pub rejected: bool,
}

impl Active {
    pub fn input(bit: bool) -> Active {
        Active {
            bit,
            started: false,
            row: None,
            col: None,
            h: HContent { count: 1, bits: [bit, false], west_info: [false, false], winfo_done: false },
            h_settled: false,
            v: VContent::default(),
            v_settled: false,
            s_info: [[false; 2]; 2],
            sinfo_done: false,
            block: None,
            main: None,
            error: false,
            rejected: false,
        }
    }
}

impl CellState {
    pub fn active(&self) -> Option<&Active> {
        match self {
            CellState::Quiescent => None,
            CellState::Active(a) => Some(a),
        }
    }

    pub fn is_quiescent(&self) -> bool {
        matches!(self, CellState::Quiescent)
    }
}
