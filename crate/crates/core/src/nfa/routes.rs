//! Alternate routes around a shortest initial-to-accepting path.
//!
//! Fix a shortest path `P` from the initial to the accepting state. An
//! alternate route is a simple directed path that shares no edge with `P`
//! and whose endpoints, but no interior state, lie on `P`. Each route,
//! together with the stretch of `P` between its endpoints, is a minimal
//! detour. Pairs of routes are compared by their attachment intervals.

use std::collections::VecDeque;

use super::{Nfa, Transition};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Ends further along `P` than it starts: an alternative to a stretch of `P`.
    Forward,
    /// Ends at or before its start: closes a cycle.
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Route {
    pub states: Vec<usize>,
    pub transitions: Vec<Transition>,
    /// Position on `P` of the first state.
    pub start: usize,
    /// Position on `P` of the last state.
    pub end: usize,
}

impl Route {
    pub fn direction(&self) -> Direction {
        if self.end > self.start {
            Direction::Forward
        } else {
            Direction::Backward
        }
    }

    /// Attachment interval with the smaller index first.
    pub fn span(&self) -> (usize, usize) {
        (self.start.min(self.end), self.start.max(self.end))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RouteOrder {
    /// `j <= k`
    Precedes,
    /// `k <= i` and `j <= l`
    Encompasses,
    /// `i <= k <= j <= l`
    Overlaps,
}

/// Relation between two routes, `first` spanning `(i, j)` and `second`
/// spanning `(k, l)` with `i <= j` and `k <= l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RouteRelation {
    pub order: RouteOrder,
    pub first: usize,
    pub second: usize,
    pub first_span: (usize, usize),
    pub second_span: (usize, usize),
}

impl RouteRelation {
    fn test((i, j): (usize, usize), (k, l): (usize, usize)) -> Option<RouteOrder> {
        if j <= k {
            Some(RouteOrder::Precedes)
        } else if k <= i && j <= l {
            Some(RouteOrder::Encompasses)
        } else if i <= k && k <= j && j <= l {
            Some(RouteOrder::Overlaps)
        } else {
            None
        }
    }

    /// Classify routes `a` and `b`, swapping their roles if the three cases
    /// do not apply in the given order. Any two intervals fit one way round.
    pub fn classify(a: usize, a_span: (usize, usize), b: usize, b_span: (usize, usize)) -> Self {
        let (order, first, second) = match Self::test(a_span, b_span) {
            Some(order) => (order, (a, a_span), (b, b_span)),
            None => {
                let order = Self::test(b_span, a_span).expect("one orientation always classifies");
                (order, (b, b_span), (a, a_span))
            }
        };
        RouteRelation {
            order,
            first: first.0,
            second: second.0,
            first_span: first.1,
            second_span: second.1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteAnalysis {
    /// States of the reference path `P`.
    pub path: Vec<usize>,
    pub path_transitions: Vec<Transition>,
    pub routes: Vec<Route>,
    /// One entry per unordered pair of routes, in lexicographic pair order.
    pub relations: Vec<RouteRelation>,
}

/// BFS from the initial state; neighbours are expanded in increasing state
/// order and, for parallel edges, the smaller symbol is used.
fn shortest_path(m: &Nfa) -> Option<(Vec<usize>, Vec<Transition>)> {
    let q = m.state_count();
    let mut parent: Vec<Option<Transition>> = vec![None; q];
    let mut seen = vec![false; q];
    seen[m.initial()] = true;
    let mut queue = VecDeque::from([m.initial()]);
    while let Some(u) = queue.pop_front() {
        if u == m.accepting() {
            break;
        }
        let mut out: Vec<Transition> = m
            .transitions()
            .iter()
            .filter(|t| t.from == u)
            .copied()
            .collect();
        out.sort_by_key(|t| (t.to, t.symbol));
        for t in out {
            if !seen[t.to] {
                seen[t.to] = true;
                parent[t.to] = Some(t);
                queue.push_back(t.to);
            }
        }
    }
    if !seen[m.accepting()] {
        return None;
    }
    let mut states = vec![m.accepting()];
    let mut edges = Vec::new();
    let mut at = m.accepting();
    while at != m.initial() {
        let t = parent[at].expect("reached states have parents");
        edges.push(t);
        states.push(t.from);
        at = t.from;
    }
    states.reverse();
    edges.reverse();
    Some((states, edges))
}

pub fn find_alternate_routes(m: &Nfa) -> Result<RouteAnalysis> {
    let (path, path_transitions) = shortest_path(m).ok_or(Error::NoPath)?;
    let mut position = vec![None; m.state_count()];
    for (i, &s) in path.iter().enumerate() {
        position[s] = Some(i);
    }
    let free: Vec<Transition> = m
        .transitions()
        .iter()
        .filter(|t| !path_transitions.contains(t))
        .copied()
        .collect();

    let mut routes = Vec::new();
    for (start, &origin) in path.iter().enumerate() {
        let mut states = vec![origin];
        let mut edges = Vec::new();
        extend_routes(
            &free,
            &position,
            start,
            &mut states,
            &mut edges,
            &mut routes,
        );
    }

    let mut relations = Vec::new();
    for a in 0..routes.len() {
        for b in a + 1..routes.len() {
            relations.push(RouteRelation::classify(
                a,
                routes[a].span(),
                b,
                routes[b].span(),
            ));
        }
    }
    Ok(RouteAnalysis {
        path,
        path_transitions,
        routes,
        relations,
    })
}

fn extend_routes(
    free: &[Transition],
    position: &[Option<usize>],
    start: usize,
    states: &mut Vec<usize>,
    edges: &mut Vec<Transition>,
    out: &mut Vec<Route>,
) {
    let at = *states.last().expect("nonempty");
    for t in free.iter().filter(|t| t.from == at) {
        if let Some(end) = position[t.to] {
            let mut route_states = states.clone();
            route_states.push(t.to);
            let mut route_edges = edges.clone();
            route_edges.push(*t);
            out.push(Route {
                states: route_states,
                transitions: route_edges,
                start,
                end,
            });
        } else if !states.contains(&t.to) {
            states.push(t.to);
            edges.push(*t);
            extend_routes(free, position, start, states, edges, out);
            states.pop();
            edges.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(from: usize, symbol: u8, to: usize) -> Transition {
        Transition::new(from, symbol, to)
    }

    #[test]
    fn chain_has_no_routes() {
        let m = Nfa::new(4, 0, 3, [t(0, 0, 1), t(1, 1, 2), t(2, 0, 3)]).unwrap();
        let a = find_alternate_routes(&m).unwrap();
        assert_eq!(a.path, vec![0, 1, 2, 3]);
        assert!(a.routes.is_empty());
    }

    #[test]
    fn unreachable_accepting_state() {
        let m = Nfa::new(2, 0, 1, [t(1, 0, 0)]).unwrap();
        assert!(matches!(find_alternate_routes(&m), Err(Error::NoPath)));
    }

    #[test]
    fn single_backward_cycle() {
        // head 0 -> 1, cycle 1 -> 2 -> 3 -> 1, tail 3 -> 4
        let m = Nfa::new(
            5,
            0,
            4,
            [t(0, 0, 1), t(1, 0, 2), t(2, 1, 3), t(3, 1, 1), t(3, 0, 4)],
        )
        .unwrap();
        let a = find_alternate_routes(&m).unwrap();
        assert_eq!(a.path, vec![0, 1, 2, 3, 4]);
        assert_eq!(a.routes.len(), 1);
        assert_eq!(a.routes[0].direction(), Direction::Backward);
        assert_eq!(a.routes[0].span(), (1, 3));
    }

    #[test]
    fn closed_cycle_at_the_initial_state() {
        let m = Nfa::new(2, 0, 0, [t(0, 0, 1), t(1, 1, 0)]).unwrap();
        let a = find_alternate_routes(&m).unwrap();
        assert_eq!(a.path, vec![0]);
        assert_eq!(a.routes.len(), 1);
        assert_eq!(a.routes[0].states, vec![0, 1, 0]);
        assert_eq!(a.routes[0].direction(), Direction::Backward);
    }

    #[test]
    fn two_separated_forward_detours() {
        // 0 -> 1 -> 2 -> 3 -> 4 -> 5 with parallel 1-edges across 1->2 and 3->4.
        let m = Nfa::new(
            6,
            0,
            5,
            [
                t(0, 0, 1),
                t(1, 0, 2),
                t(1, 1, 2),
                t(2, 0, 3),
                t(3, 0, 4),
                t(3, 1, 4),
                t(4, 0, 5),
            ],
        )
        .unwrap();
        let a = find_alternate_routes(&m).unwrap();
        assert_eq!(a.routes.len(), 2);
        assert!(a.routes.iter().all(|r| r.direction() == Direction::Forward));
        assert_eq!(a.relations.len(), 1);
        assert_eq!(a.relations[0].order, RouteOrder::Precedes);
    }

    #[test]
    fn interval_classification_covers_all_pairs() {
        for i in 0..6 {
            for j in i..6 {
                for k in 0..6 {
                    for l in k..6 {
                        let r = RouteRelation::classify(0, (i, j), 1, (k, l));
                        let ((a, b), (c, d)) = (r.first_span, r.second_span);
                        match r.order {
                            RouteOrder::Precedes => assert!(b <= c),
                            RouteOrder::Encompasses => assert!(c <= a && b <= d),
                            RouteOrder::Overlaps => assert!(a <= c && c <= b && b <= d),
                        }
                    }
                }
            }
        }
        let nested = RouteRelation::classify(0, (2, 3), 1, (1, 5));
        assert_eq!(nested.order, RouteOrder::Encompasses);
        let overlap = RouteRelation::classify(0, (2, 5), 1, (1, 3));
        assert_eq!((overlap.order, overlap.first), (RouteOrder::Overlaps, 1));
    }
}
