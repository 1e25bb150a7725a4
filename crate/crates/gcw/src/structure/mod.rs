//! Neighbour-set machinery and normal quotients.

mod neighbour;
mod quotient;

pub use neighbour::{
    check_round_trip, is_elusive, is_s_elusive_pair, is_spherical_bitrade, neighbour_set, reconstruct, BitradeCounterexample,
    BitradeReport, ElusiveSearch, ElusiveVerdict, ElusiveWitness, NeighbourSet,
};
pub use quotient::{is_s_distance_transitive, quotient, verify_quotient_prop, DistanceTransitivity, QuotientGraph, QuotientReport};
