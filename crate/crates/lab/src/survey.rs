//! Parallel surveys over native enumerations or graph6 streams.
//!
//! Workers classify graphs independently and fold into partial tallies; the
//! tallies merge into a report whose contents are sorted, so the report does
//! not depend on the number of workers or their schedule.

use std::io;

use rayon::prelude::*;
use rayon::ThreadPool;

use mhc_core::canon::{canonical_form, CANON_MAX_ORDER};
use mhc_core::graph::{Graph, GraphError};
use mhc_core::minimality::{is_minimally_hc, MhcVerdict};
use mhc_core::search::{
    classify, enumerate_graphs, is_min_degree_4_witness, GraphFilter, Source, SurveyReport, SurveyTally,
};

use crate::spill::CanonSet;

#[derive(Debug, thiserror::Error)]
pub enum SurveyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("graph {index} has order {found}, expected {expected}")]
    OrderMismatch { index: usize, expected: usize, found: usize },
}

/// A pool with `workers` threads, or rayon's default when absent.
pub fn pool(workers: Option<usize>) -> Result<ThreadPool, SurveyError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w.max(1));
    }
    Ok(builder.build()?)
}

/// Classifies `graphs` in parallel and aggregates the report.
pub fn survey_graphs(
    pool: &ThreadPool,
    n: usize,
    source: Source,
    graphs: &[Graph],
) -> Result<SurveyReport, SurveyError> {
    if n > CANON_MAX_ORDER {
        return Err(GraphError::TooLarge { what: "survey", n, max: CANON_MAX_ORDER }.into());
    }
    if let Some((index, g)) = graphs.iter().enumerate().find(|(_, g)| g.order() != n) {
        return Err(SurveyError::OrderMismatch { index, expected: n, found: g.order() });
    }
    let tally = pool.install(|| {
        graphs
            .par_iter()
            .try_fold(SurveyTally::default, |mut t, g| -> Result<_, GraphError> {
                t.record(g, classify(g)?)?;
                Ok(t)
            })
            .try_reduce(SurveyTally::default, |a, b| Ok(a.merge(b)))
    })?;
    Ok(tally.finish(n, source)?)
}

/// Survey of every graph on `n ≤ 8` vertices with minimum degree 3 that is
/// 3-connected; the rest cannot be hamiltonian-connected.
pub fn survey_native(pool: &ThreadPool, n: usize) -> Result<SurveyReport, SurveyError> {
    let graphs = enumerate_graphs(n, GraphFilter::SURVEY)?;
    survey_graphs(pool, n, Source::NativeEnumeration, &graphs)
}

/// Drops isomorphic repeats from a stream, keeping first occurrences in
/// order. Returns the kept graphs and the number dropped.
pub fn dedup_stream(graphs: Vec<Graph>, spill_bound: usize) -> Result<(Vec<Graph>, u64), SurveyError> {
    let mut seen = CanonSet::new(spill_bound);
    let mut kept = Vec::with_capacity(graphs.len());
    let mut dropped = 0;
    for g in graphs {
        if seen.insert(&canonical_form(&g)?)? {
            kept.push(g);
        } else {
            dropped += 1;
        }
    }
    Ok((kept, dropped))
}

/// A minimally hamiltonian-connected graph with minimum degree at least 4.
#[derive(Debug, Clone)]
pub struct HuntHit {
    /// Position in the input sequence.
    pub index: usize,
    pub graph: Graph,
    pub verdict: MhcVerdict,
}

/// The first graph in input order that is minimally hamiltonian-connected
/// with minimum degree at least 4.
pub fn hunt_min_degree_4(pool: &ThreadPool, graphs: &[Graph]) -> Result<Option<HuntHit>, SurveyError> {
    let hit = pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| is_min_degree_4_witness(g).map(|w| w.then_some(i)))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let Some(index) = hit.into_iter().flatten().next() else {
        return Ok(None);
    };
    let graph = graphs[index].clone();
    let verdict = is_minimally_hc(&graph)?;
    Ok(Some(HuntHit { index, graph, verdict }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mhc_core::constructions::build_wheel;

    #[test]
    fn native_spectra() {
        let p = pool(Some(2)).unwrap();
        let expected: [(usize, &[usize]); 4] = [(4, &[3]), (5, &[4]), (6, &[3, 5]), (7, &[4, 6])];
        for (n, spectrum) in expected {
            let r = survey_native(&p, n).unwrap();
            assert_eq!(r.max_degree_spectrum, spectrum, "n = {n}");
            assert_eq!(r.min_degree_spectrum, [3]);
            assert!(r.wheel_unique_at_top);
        }
    }

    #[test]
    fn worker_count_does_not_matter() {
        let a = survey_native(&pool(Some(1)).unwrap(), 6).unwrap();
        let b = survey_native(&pool(Some(4)).unwrap(), 6).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn order_mismatch() {
        let p = pool(Some(1)).unwrap();
        let gs = [Graph::complete(5).unwrap()];
        assert!(matches!(
            survey_graphs(&p, 4, Source::ExternalStream, &gs),
            Err(SurveyError::OrderMismatch { index: 0, expected: 4, found: 5 })
        ));
    }

    #[test]
    fn dedup_keeps_first() {
        let c = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = c.relabel(&[1, 2, 3, 0]);
        let k = Graph::complete(4).unwrap();
        let (kept, dropped) = dedup_stream(vec![c.clone(), k.clone(), d], 1).unwrap();
        assert_eq!(kept, [c, k]);
        assert_eq!(dropped, 1);
    }

    #[test]
    fn hunt_finds_nothing_small() {
        let p = pool(Some(2)).unwrap();
        let gs = [build_wheel(6).unwrap().graph, Graph::complete(5).unwrap()];
        assert!(hunt_min_degree_4(&p, &gs).unwrap().is_none());
    }
}
