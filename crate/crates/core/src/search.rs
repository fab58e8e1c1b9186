//! Isomorph-free enumeration of small graphs and the survey pipeline that
//! sorts them into minimally hamiltonian-connected graphs and the rest.
//!
//! Enumeration grows one vertex at a time: every graph on `n` vertices is a
//! graph on `n − 1` vertices plus a new vertex joined to some subset, so the
//! classes at order `n` are the canonical forms of all such extensions of
//! the classes at order `n − 1`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::canon::{canonical_form, CanonicalForm};
use crate::constructions::build_wheel;
use crate::graph::{full_mask, Graph, GraphError};
use crate::minimality::{is_minimally_hc, MIN_ORDER};
use crate::solver::is_hamiltonian_connected;

/// Largest order the native enumeration produces.
pub const ENUMERATION_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct GraphFilter {
    pub min_degree_3: bool,
    pub three_connected: bool,
}

impl GraphFilter {
    pub const NONE: GraphFilter = GraphFilter {
        min_degree_3: false,
        three_connected: false,
    };
    pub const SURVEY: GraphFilter = GraphFilter {
        min_degree_3: true,
        three_connected: true,
    };

    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.min_degree_3 || g.min_degree() >= 3) && (!self.three_connected || g.is_k_connected(3))
    }
}

fn classes_up_to(n: usize, last: impl Fn(&Graph, u64) -> bool) -> Result<BTreeSet<CanonicalForm>, GraphError> {
    let mut level = BTreeSet::new();
    level.insert(canonical_form(&Graph::empty(1)?)?);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for class in &level {
            let h = class.to_graph();
            for s in 0..=full_mask(m - 1) {
                if m == n && !last(&h, s) {
                    continue;
                }
                next.insert(canonical_form(&h.extend_vertex(s)?)?);
            }
        }
        level = next;
    }
    Ok(level)
}

/// One canonically labelled representative per isomorphism class of graphs
/// on `n` vertices passing `filter`, sorted by canonical form.
pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::TooSmall {
            what: "enumeration",
            n,
            min: 1,
        });
    }
    if n > ENUMERATION_MAX_ORDER {
        return Err(GraphError::TooLarge {
            what: "native enumeration",
            n,
            max: ENUMERATION_MAX_ORDER,
        });
    }
    let min_degree_3 = filter.min_degree_3;
    // at the last level a vertex of degree 2 must gain the new neighbour and
    // anything below 2 cannot reach 3
    let feasible = |h: &Graph, s: u64| {
        if !min_degree_3 {
            return true;
        }
        s.count_ones() >= 3 && (0..h.order()).all(|v| h.degree(v) + (s >> v & 1) as usize >= 3)
    };
    Ok(classes_up_to(n, feasible)?
        .into_iter()
        .map(|c| c.to_graph())
        .filter(|g| filter.accepts(g))
        .collect())
}

/// Where a graph leaves the survey funnel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    MinDegree,
    Connectivity,
    NotHc,
    NotMinimal,
    Minimal,
}

/// Runs the funnel: minimum degree, then 3-connectivity, then
/// hamiltonian-connectivity, then minimality.
pub fn classify(g: &Graph) -> Result<Stage, GraphError> {
    if g.order() < MIN_ORDER {
        return Err(GraphError::TooSmall {
            what: "survey",
            n: g.order(),
            min: MIN_ORDER,
        });
    }
    if g.min_degree() < 3 {
        return Ok(Stage::MinDegree);
    }
    if !g.is_k_connected(3) {
        return Ok(Stage::Connectivity);
    }
    if !is_hamiltonian_connected(g)?.is_hc {
        return Ok(Stage::NotHc);
    }
    Ok(if is_minimally_hc(g)?.is_minimal {
        Stage::Minimal
    } else {
        Stage::NotMinimal
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PruneStats {
    pub scanned: u64,
    pub min_degree: u64,
    pub connectivity: u64,
    pub not_hc: u64,
    pub not_minimal: u64,
    pub minimal: u64,
}

impl PruneStats {
    pub fn record(&mut self, stage: Stage) {
        self.scanned += 1;
        *match stage {
            Stage::MinDegree => &mut self.min_degree,
            Stage::Connectivity => &mut self.connectivity,
            Stage::NotHc => &mut self.not_hc,
            Stage::NotMinimal => &mut self.not_minimal,
            Stage::Minimal => &mut self.minimal,
        } += 1;
    }

    pub fn merge(&mut self, other: &PruneStats) {
        self.scanned += other.scanned;
        self.min_degree += other.min_degree;
        self.connectivity += other.connectivity;
        self.not_hc += other.not_hc;
        self.not_minimal += other.not_minimal;
        self.minimal += other.minimal;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    NativeEnumeration,
    ExternalStream,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::NativeEnumeration => "native",
            Source::ExternalStream => "stream",
        }
    }
}

/// Order-insensitive accumulator for survey results. Partial tallies from
/// different workers merge into the same final report.
#[derive(Debug, Clone, Default)]
pub struct SurveyTally {
    pub stats: PruneStats,
    mhc: BTreeMap<CanonicalForm, Graph>,
}

impl SurveyTally {
    pub fn record(&mut self, g: &Graph, stage: Stage) -> Result<(), GraphError> {
        self.stats.record(stage);
        if stage == Stage::Minimal {
            let c = canonical_form(g)?;
            self.mhc.entry(c).or_insert_with(|| c.to_graph());
        }
        Ok(())
    }

    pub fn merge(mut self, other: SurveyTally) -> SurveyTally {
        self.stats.merge(&other.stats);
        self.mhc.extend(other.mhc);
        self
    }

    pub fn finish(self, n: usize, source: Source) -> Result<SurveyReport, GraphError> {
        let mhc_graphs: Vec<Graph> = self.mhc.into_values().collect();
        let max_degree_spectrum: BTreeSet<usize> = mhc_graphs.iter().map(Graph::max_degree).collect();
        let min_degree_spectrum: BTreeSet<usize> = mhc_graphs.iter().map(Graph::min_degree).collect();
        let top: Vec<&Graph> = mhc_graphs
            .iter()
            .filter(|g| n >= 1 && g.max_degree() == n - 1)
            .collect();
        let wheel_unique_at_top = match (top.as_slice(), build_wheel(n)) {
            ([only], Ok(w)) => canonical_form(only)? == canonical_form(&w.graph)?,
            _ => false,
        };
        Ok(SurveyReport {
            n,
            source,
            graphs_scanned: self.stats.scanned,
            mhc_graphs,
            max_degree_spectrum: max_degree_spectrum.into_iter().collect(),
            min_degree_spectrum: min_degree_spectrum.into_iter().collect(),
            wheel_unique_at_top,
            stats: self.stats,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    pub n: usize,
    pub source: Source,
    pub graphs_scanned: u64,
    /// Canonically labelled, sorted by canonical form, one per class.
    pub mhc_graphs: Vec<Graph>,
    pub max_degree_spectrum: Vec<usize>,
    pub min_degree_spectrum: Vec<usize>,
    pub wheel_unique_at_top: bool,
    pub stats: PruneStats,
}

/// Sequential survey over any graph sequence of order `n`.
pub fn survey<'a>(
    n: usize,
    source: Source,
    graphs: impl IntoIterator<Item = &'a Graph>,
) -> Result<SurveyReport, GraphError> {
    let mut tally = SurveyTally::default();
    for g in graphs {
        tally.record(g, classify(g)?)?;
    }
    tally.finish(n, source)
}

/// True when `g` is minimally hamiltonian-connected with minimum degree at
/// least 4.
pub fn is_min_degree_4_witness(g: &Graph) -> Result<bool, GraphError> {
    if g.order() < MIN_ORDER || g.min_degree() < 4 {
        return Ok(false);
    }
    Ok(classify(g)? == Stage::Minimal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_graphs(n, GraphFilter::NONE).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
    }

    #[test]
    fn min_degree_filter_at_four() {
        let gs = enumerate_graphs(4, GraphFilter::SURVEY).unwrap();
        assert_eq!(gs, [Graph::complete(4).unwrap()]);
    }

    #[test]
    fn filtered_matches_unfiltered() {
        for n in 4..=6 {
            let all = enumerate_graphs(n, GraphFilter::NONE).unwrap();
            let filtered = enumerate_graphs(n, GraphFilter::SURVEY).unwrap();
            let expected: Vec<_> = all.into_iter().filter(|g| GraphFilter::SURVEY.accepts(g)).collect();
            assert_eq!(filtered, expected);
        }
    }

    #[test]
    fn order_bounds() {
        assert!(enumerate_graphs(9, GraphFilter::NONE).is_err());
        assert!(enumerate_graphs(0, GraphFilter::NONE).is_err());
    }

    #[test]
    fn survey_four_and_five() {
        let gs = enumerate_graphs(4, GraphFilter::NONE).unwrap();
        let r = survey(4, Source::NativeEnumeration, &gs).unwrap();
        assert_eq!(r.graphs_scanned, 11);
        assert_eq!(r.mhc_graphs, [Graph::complete(4).unwrap()]);
        assert_eq!(r.max_degree_spectrum, [3]);
        assert_eq!(r.min_degree_spectrum, [3]);
        assert!(r.wheel_unique_at_top);

        let gs = enumerate_graphs(5, GraphFilter::SURVEY).unwrap();
        let r = survey(5, Source::NativeEnumeration, &gs).unwrap();
        assert_eq!(r.max_degree_spectrum, [4]);
        assert!(r.wheel_unique_at_top);
    }

    #[test]
    fn tallies_merge_in_any_order() {
        let gs = enumerate_graphs(6, GraphFilter::SURVEY).unwrap();
        let mut a = SurveyTally::default();
        let mut b = SurveyTally::default();
        for (i, g) in gs.iter().enumerate() {
            let t = if i % 2 == 0 { &mut a } else { &mut b };
            t.record(g, classify(g).unwrap()).unwrap();
        }
        let ab = a.clone().merge(b.clone()).finish(6, Source::NativeEnumeration).unwrap();
        let ba = b.merge(a).finish(6, Source::NativeEnumeration).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(ab.max_degree_spectrum, [3, 5]);
    }

    #[test]
    fn hunt_rejects_known_graphs() {
        assert!(!is_min_degree_4_witness(&build_wheel(6).unwrap().graph).unwrap());
        assert!(!is_min_degree_4_witness(&Graph::complete(5).unwrap()).unwrap());
    }
}
