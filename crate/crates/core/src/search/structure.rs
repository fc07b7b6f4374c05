//! Detour structure of a witness.
//!
//! Each alternate route is one minimal detour. For every pair of routes the
//! attachment intervals give the shape (separated, overlapping, nested) and
//! the route directions decide how often an accepting walk may use each:
//!
//! | shape        | directions                      | category          |
//! |--------------|---------------------------------|-------------------|
//! | any          | both forward                    | `EachOnce`        |
//! | any          | both backward                   | `BothRepeatable`  |
//! | nested       | outer backward, inner forward   | `BothRepeatable`  |
//! | otherwise    | one forward, one backward       | `OneRepeatable`   |
//!
//! `BothRepeatable` means two cycles that can be pumped independently,
//! which rules out unique acceptance at all large lengths.

use crate::nfa::{find_alternate_routes, Direction, RouteAnalysis, RouteOrder, RouteRelation};
use crate::Result;

use super::{build_lump_tree, LumpTree, WitnessResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairShape {
    Separated,
    Overlapping,
    Nested,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UsageCategory {
    EachOnce,
    OneRepeatable,
    BothRepeatable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub relation: RouteRelation,
    pub shape: PairShape,
    pub category: UsageCategory,
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub routes: RouteAnalysis,
    pub minimal_detours: usize,
    pub pairs: Vec<PairReport>,
    pub lump_tree: LumpTree,
}

impl StructureReport {
    /// Some pair of detours can both be repeated at will.
    pub fn has_independent_cycles(&self) -> bool {
        self.pairs
            .iter()
            .any(|p| p.category == UsageCategory::BothRepeatable)
    }
}

pub fn classify_pair(relation: RouteRelation, first: Direction, second: Direction) -> PairReport {
    use Direction::*;
    let shape = match relation.order {
        RouteOrder::Precedes => PairShape::Separated,
        RouteOrder::Overlaps => PairShape::Overlapping,
        RouteOrder::Encompasses => PairShape::Nested,
    };
    // For `Encompasses`, `second` is the outer route.
    let category = match (first, second) {
        (Forward, Forward) => UsageCategory::EachOnce,
        (Backward, Backward) => UsageCategory::BothRepeatable,
        (Forward, Backward) if shape == PairShape::Nested => UsageCategory::BothRepeatable,
        _ => UsageCategory::OneRepeatable,
    };
    PairReport {
        relation,
        shape,
        category,
    }
}

pub fn classify_structure(w: &WitnessResult) -> Result<StructureReport> {
    let routes = find_alternate_routes(&w.witness)?;
    let lump_tree = build_lump_tree(&w.run, Some(&w.word))?;
    let pairs = routes
        .relations
        .iter()
        .map(|&rel| {
            classify_pair(
                rel,
                routes.routes[rel.first].direction(),
                routes.routes[rel.second].direction(),
            )
        })
        .collect();
    Ok(StructureReport {
        minimal_detours: routes.routes.len(),
        routes,
        pairs,
        lump_tree,
    })
}
