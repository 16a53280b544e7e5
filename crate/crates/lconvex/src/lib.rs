//! Recognition of L-convex polyomino pictures.
//!
//! A polyomino is L-convex when any two of its cells are joined by an inner
//! 4-connected path with at most one change of direction. This crate provides
//!
//! * [`picture`] — the rectangular 0/1 picture type, text parsing/rendering,
//!   and placed polyominoes;
//! * [`convex`] — two independent reference deciders for L-convexity (the
//!   pairwise bend definition and the corner/zone characterization) plus the
//!   component predicates they share;
//! * [`enumerate`] — exhaustive generation of polyomino pictures at desk
//!   scale;
//! * [`gen`] — seeded random picture generators for test corpora;
//! * [`engine`] — a generic synchronous 2D cellular-automaton simulator over
//!   the von Neumann neighborhood with trace recording;
//! * [`recognizer`] — a single von Neumann radius-1 CA rule that accepts
//!   exactly the L-convex polyomino pictures at the origin cell, within a
//!   fixed constant of real time `n + m - 2`;
//! * [`difftest`] — differential testing of the recognizer against the
//!   reference deciders, with shrinking, lateness accounting and audits.
//!
//! Coordinates follow the automaton convention: `x` grows east, `y` grows
//! north, the origin `(0,0)` is the south-west corner of the picture. Text
//! files list rows north to south, so the first line of a `.pic` file is the
//! northmost row.

pub mod convex;
pub mod difftest;
pub mod engine;
pub mod enumerate;
pub mod gen;
pub mod picture;
pub mod recognizer;

pub use convex::{is_hv_convex, is_l_convex_corner, is_l_convex_definitional, is_polyomino_picture};
pub use picture::{parse_picture, render_picture, Picture};
pub use recognizer::{decide, RunReport, Verdict};
