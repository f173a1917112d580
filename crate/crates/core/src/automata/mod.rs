//! Complete deterministic automata over named alphabets, their text format and
//! the Boolean operations used to build confusion automata.

mod alphabet;
mod dfa;
pub mod format;
pub(crate) mod nfa;
mod ops;
pub mod random;
mod regex;

pub use alphabet::{Alphabet, SymbolId};
pub use dfa::{Dfa, StateId, Trace};
pub use format::{parse_dfa, parse_traces, write_dfa, write_traces};
pub use ops::{
    align_alphabet, all_traces, complement, confusion_automata, difference, distinguishing_trace,
    equivalent, intersect, minimize, product, union, ConfusionAutomata,
};
pub(crate) use ops::access_traces;
pub use regex::{regex_to_dfa, Regex};
