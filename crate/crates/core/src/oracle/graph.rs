//! Marked trivalent graphs: `n` labeled vertices, each with half-edge slots
//! marked `a`, `b`, `c`, joined by a matching on the `3n` slots.
//!
//! Matched slots become edges between their vertices (loops and parallel
//! edges included); unmatched slots are monovalent leaves that only carry
//! the weight `u`. Each connected component of the reduced multigraph is
//! classified by its cyclomatic number `edges - vertices + 1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::poly::UPolynomial;
use crate::rational;

use super::matching::{for_each_involution, Matching};
use super::OracleError;

/// Largest vertex count accepted by [`enumerate_marked_graphs`].
pub const GRAPH_BOUND: u32 = 4;

/// Cycle class of one connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentClass {
    Acyclic,
    Unicyclic,
    Multicyclic,
}

impl ComponentClass {
    fn from_cyclomatic(c: usize) -> Self {
        match c {
            0 => ComponentClass::Acyclic,
            1 => ComponentClass::Unicyclic,
            _ => ComponentClass::Multicyclic,
        }
    }
}

/// Reduced component: vertex count, edge count (loops count once).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: usize,
    pub edges: usize,
}

impl Component {
    pub fn cyclomatic(&self) -> usize {
        self.edges + 1 - self.vertices
    }

    pub fn class(&self) -> ComponentClass {
        ComponentClass::from_cyclomatic(self.cyclomatic())
    }
}

/// A marked graph; slot `3 v + k` is half-edge `k` (`a`, `b`, `c`) of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedGraph {
    matching: Matching,
}

impl MarkedGraph {
    pub fn new(matching: Matching) -> Option<Self> {
        matching.len().is_multiple_of(3).then_some(Self { matching })
    }

    pub fn vertices(&self) -> usize {
        self.matching.len() / 3
    }

    /// Unmatched slots; the graph weighs `u` to this power.
    pub fn leaves(&self) -> usize {
        self.matching.fixed_points()
    }

    /// Edges of the reduced multigraph as vertex pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        edges_of(self.matching.as_slice())
    }

    pub fn components(&self) -> Vec<Component> {
        components_of(self.vertices(), self.matching.as_slice())
    }

    pub fn profile(&self) -> ComponentProfile {
        ComponentProfile::from_components(&self.components())
    }
}

fn edges_of(partner: &[usize]) -> Vec<(usize, usize)> {
    partner
        .iter()
        .enumerate()
        .filter(|&(i, &p)| i < p)
        .map(|(i, &p)| (i / 3, p / 3))
        .collect()
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn components_of(n: usize, partner: &[usize]) -> Vec<Component> {
    let mut parent: Vec<usize> = (0..n).collect();
    let edges = edges_of(partner);
    for &(a, b) in &edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut by_root: BTreeMap<usize, Component> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        by_root.entry(r).or_insert(Component { vertices: 0, edges: 0 }).vertices += 1;
    }
    for &(a, _) in &edges {
        let r = find(&mut parent, a);
        by_root.get_mut(&r).expect("root exists").edges += 1;
    }
    by_root.into_values().collect()
}

/// Number of components of each class in one graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentProfile {
    pub acyclic: usize,
    pub unicyclic: usize,
    pub multicyclic: usize,
}

impl ComponentProfile {
    fn from_components(components: &[Component]) -> Self {
        let mut p = Self::default();
        for c in components {
            match c.class() {
                ComponentClass::Acyclic => p.acyclic += 1,
                ComponentClass::Unicyclic => p.unicyclic += 1,
                ComponentClass::Multicyclic => p.multicyclic += 1,
            }
        }
        p
    }

    pub fn total(&self) -> usize {
        self.acyclic + self.unicyclic + self.multicyclic
    }

    /// `true` if every component (vacuously, for the empty graph) is of
    /// class `class`.
    pub fn only(&self, class: ComponentClass) -> bool {
        let count = match class {
            ComponentClass::Acyclic => self.acyclic,
            ComponentClass::Unicyclic => self.unicyclic,
            ComponentClass::Multicyclic => self.multicyclic,
        };
        count == self.total()
    }
}

impl fmt::Display for ComponentProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "acyclic={} unicyclic={} multicyclic={}",
            self.acyclic, self.unicyclic, self.multicyclic
        )
    }
}

/// Weighted counts of all marked graphs on `n` vertices, keyed by profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCensus {
    pub n: u32,
    pub by_profile: BTreeMap<ComponentProfile, UPolynomial>,
}

impl ComponentCensus {
    /// Graphs whose components all lie in `class`.
    pub fn only(&self, class: ComponentClass) -> UPolynomial {
        self.by_profile
            .iter()
            .filter(|(p, _)| p.only(class))
            .fold(UPolynomial::zero(), |acc, (_, w)| acc + w)
    }

    pub fn total(&self) -> UPolynomial {
        self.by_profile.values().fold(UPolynomial::zero(), |acc, w| acc + w)
    }

    /// Merges another census of the same `n`.
    pub fn merge(&mut self, other: &ComponentCensus) {
        for (p, w) in &other.by_profile {
            *self.by_profile.entry(*p).or_default() += w;
        }
    }
}

/// Builds every marked graph on `n` vertices and aggregates weights by
/// component profile.
pub fn enumerate_marked_graphs(n: u32) -> Result<ComponentCensus, OracleError> {
    if n > GRAPH_BOUND {
        return Err(OracleError::BoundExceeded { n, bound: GRAPH_BOUND });
    }
    let slots = 3 * n as usize;
    let mut counts: BTreeMap<(ComponentProfile, usize), u64> = BTreeMap::new();
    for_each_involution(slots, |partner| {
        let profile = ComponentProfile::from_components(&components_of(n as usize, partner));
        let leaves = partner.iter().enumerate().filter(|(i, &p)| *i == p).count();
        *counts.entry((profile, leaves)).or_default() += 1;
    });
    let mut by_profile: BTreeMap<ComponentProfile, UPolynomial> = BTreeMap::new();
    for ((profile, leaves), c) in counts {
        by_profile
            .entry(profile)
            .or_default()
            .add_term((leaves as u32, 0), rational::int(c as i64));
    }
    Ok(ComponentCensus { n, by_profile })
}
