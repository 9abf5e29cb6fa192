//! Free modules of diagrams and their quotients by four-term relations.

mod element;
mod quotient;
mod relations;

pub use element::{combine, ModuleElement};
pub use quotient::{max_degree, quotient_equal, quotient_equal_over, QuotientAnswer, RelationSpan, Ring};
pub use relations::{
    expand_4t, generate_2t_pairs, generate_4t, generate_4t_with, FramedMove, Placements, Provenance,
    RelationGenerator,
    TwoTermPair,
};
