pub mod corpus;
pub mod exec;
pub mod explicit;
pub mod gf2k;
pub mod graph;
pub mod hamilton;
pub mod lift;
pub mod orbital;
pub mod perm;
pub mod pipeline;
