//! Morphological analysis of Albanian: alphabet and collation, inflection
//! paradigms, a compiled lexicon, dynamic word recognizers and multi-token
//! grammars.

pub mod alphabet;
pub mod analysis;
pub mod features;
pub mod lexicon;
pub mod morphogrammar;
pub mod paradigm;
pub mod resources;
pub mod syntax;
