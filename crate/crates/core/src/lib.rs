//! Finite orders as relations, the inclusion poset Ω of all orders on a
//! fixed ground set, and the combinatorics and topology of its intervals.

pub mod classifier;
pub mod error;
pub mod format;
pub mod moebius;
pub mod omega;
pub mod poset;
pub mod relation;
pub mod topology;
pub mod verify;

pub use classifier::{
    classify_upper, e_set, upper_interval_poset, ESet, EquivalencePartition, UpperIntervalClass,
};
pub use error::{OmegaError, Result};
pub use moebius::{
    compare_mobius, mobius, mobius_closed, mobius_recursive, MobiusComparison, MobiusResult,
};
pub use omega::{
    adjacent_pairs, covers_above, enumerate_orders, frattini, interval_orders,
    maximal_subrelations, minimal_missing_pairs, orders_above, pair_order_leq, AdjacentPairSet,
    EnumerationCap, IntervalSpec, Openness, Strategy,
};
pub use relation::{ElementSet, GroundSet, OrderRelation, Pair, Relation};
