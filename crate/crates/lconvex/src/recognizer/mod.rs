pub mod cell;
mod rule;
mod decide;
pub mod trace;

pub use cell::CellState;
pub use decide::{decide, decide_with, DecideOptions, RunLog, RunReport, Verdict, LATENESS_ALLOWANCE};
pub use rule::RecognizerRule;
