//! Newline-delimited JSON records. Field order is the declaration order.

use serde::Serialize;

use mhc_core::constructions::{Family, LabeledGraph};
use mhc_core::formulas::PairRecord;
use mhc_core::graph::Graph;
use mhc_core::minimality::{EdgeEvidence, MhcVerdict};
use mhc_core::search::{PruneStats, SurveyReport};
use mhc_core::solver::{HcResult, PruneReason};

use crate::graph6::emit_graph6;

pub fn to_line<T: Serialize>(record: &T) -> String {
    serde_json::to_string(record).expect("records serialize")
}

/// `W8`, `G(16,5)` or `H(17,5)`.
pub fn instance_name(lg: &LabeledGraph) -> String {
    let p = lg.params;
    match lg.family {
        Family::Wheel => format!("W{}", p.n),
        Family::CaseOdd => format!("G({},{})", p.n, p.delta),
        Family::CaseEven => format!("H({},{})", p.n, p.delta),
    }
}

#[derive(Debug, Serialize)]
pub struct ConstructionRecord {
    pub kind: &'static str,
    pub name: String,
    pub family: String,
    pub n: usize,
    pub delta: usize,
    pub k: usize,
    pub s: usize,
    pub size: usize,
    pub degree_sequence: Vec<usize>,
    pub graph6: String,
    pub labels: Vec<String>,
}

impl ConstructionRecord {
    pub fn new(lg: &LabeledGraph) -> Self {
        let p = lg.params;
        ConstructionRecord {
            kind: "construction",
            name: instance_name(lg),
            family: lg.family.to_string(),
            n: p.n,
            delta: p.delta,
            k: p.k,
            s: p.s,
            size: lg.graph.size(),
            degree_sequence: lg.graph.degree_profile().sequence(),
            graph6: emit_graph6(&lg.graph),
            labels: (0..p.n).map(|v| lg.label(v)).collect(),
        }
    }
}

pub fn prune_name(reason: PruneReason) -> &'static str {
    match reason {
        PruneReason::MinDegree => "MinDegree",
        PruneReason::Connectivity => "Connectivity",
    }
}

#[derive(Debug, Serialize)]
pub struct HcRecord {
    pub kind: &'static str,
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub is_hc: bool,
    pub witness_pairs_checked: usize,
    pub failing_pair: Option<[usize; 2]>,
    pub pruned_by: Option<&'static str>,
}

impl HcRecord {
    pub fn new(line: usize, g: &Graph, r: &HcResult) -> Self {
        HcRecord {
            kind: "hc",
            line,
            graph6: emit_graph6(g),
            n: g.order(),
            is_hc: r.is_hc,
            witness_pairs_checked: r.witness_pairs_checked,
            failing_pair: r.failing_pair.map(|(u, v)| [u, v]),
            pruned_by: r.pruned_by.map(prune_name),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EdgeRecord {
    pub edge: [usize; 2],
    pub reason: Option<&'static str>,
    pub still_hc: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refuting_pair: Option<[usize; 2]>,
}

impl EdgeRecord {
    pub fn new(e: &EdgeEvidence, certificate: bool) -> Self {
        EdgeRecord {
            edge: [e.edge.lo(), e.edge.hi()],
            reason: e.reason.map(|r| r.name()),
            still_hc: e.still_hc,
            refuting_pair: e.refuting_pair.filter(|_| certificate).map(|(u, v)| [u, v]),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MhcRecord {
    pub kind: &'static str,
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub is_hc: bool,
    pub is_minimal: bool,
    pub fast_path_used: bool,
    pub edges: Vec<EdgeRecord>,
}

impl MhcRecord {
    pub fn new(line: usize, g: &Graph, v: &MhcVerdict, certificate: bool) -> Self {
        MhcRecord {
            kind: "mhc",
            line,
            graph6: emit_graph6(g),
            n: g.order(),
            is_hc: v.is_hc,
            is_minimal: v.is_minimal,
            fast_path_used: v.fast_path_used,
            edges: v.edge_evidence.iter().map(|e| EdgeRecord::new(e, certificate)).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ConnectivityRecord {
    pub kind: &'static str,
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub size: usize,
    pub connectivity: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

#[derive(Debug, Serialize)]
pub struct FormulaPairRecord {
    pub kind: &'static str,
    pub instance: String,
    pub family: String,
    pub n: usize,
    pub delta: usize,
    pub case: Option<String>,
    pub u: String,
    pub v: String,
    pub verified: bool,
    pub path: Option<Vec<String>>,
    pub error: Option<String>,
}

impl FormulaPairRecord {
    pub fn new(lg: &LabeledGraph, r: &PairRecord) -> Self {
        let (u, v) = r.path.as_ref().map_or((r.u, r.v), |p| p.endpoints);
        FormulaPairRecord {
            kind: "pair",
            instance: instance_name(lg),
            family: lg.family.to_string(),
            n: lg.params.n,
            delta: lg.params.delta,
            case: r.case.map(|c| c.to_string()),
            u: lg.label(u),
            v: lg.label(v),
            verified: r.verified(),
            path: r.path.as_ref().map(|p| p.vertices.iter().map(|&x| lg.label(x)).collect()),
            error: r.error.as_ref().map(|e| e.to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FormulaSummary {
    pub kind: &'static str,
    pub instances: usize,
    pub pairs: usize,
    pub verified: usize,
    pub failures: usize,
}

#[derive(Debug, Serialize)]
pub struct MhcGraphRecord {
    pub kind: &'static str,
    pub n: usize,
    pub graph6: String,
    pub max_degree: usize,
    pub min_degree: usize,
    pub size: usize,
}

impl MhcGraphRecord {
    pub fn new(g: &Graph) -> Self {
        MhcGraphRecord {
            kind: "mhc-graph",
            n: g.order(),
            graph6: emit_graph6(g),
            max_degree: g.max_degree(),
            min_degree: g.min_degree(),
            size: g.size(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FunnelRecord {
    pub scanned: u64,
    pub min_degree: u64,
    pub connectivity: u64,
    pub not_hc: u64,
    pub not_minimal: u64,
    pub minimal: u64,
}

impl From<&PruneStats> for FunnelRecord {
    fn from(s: &PruneStats) -> Self {
        FunnelRecord {
            scanned: s.scanned,
            min_degree: s.min_degree,
            connectivity: s.connectivity,
            not_hc: s.not_hc,
            not_minimal: s.not_minimal,
            minimal: s.minimal,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SurveyRecord {
    pub kind: &'static str,
    pub n: usize,
    pub source: &'static str,
    pub graphs_scanned: u64,
    pub duplicates_skipped: u64,
    pub mhc_count: usize,
    pub max_degree_spectrum: Vec<usize>,
    pub predicted_max_degree_spectrum: Vec<usize>,
    pub spectrum_matches_prediction: bool,
    pub min_degree_spectrum: Vec<usize>,
    pub delta_n_minus_2_absent: bool,
    pub wheel_unique_at_top: bool,
    pub funnel: FunnelRecord,
}

impl SurveyRecord {
    pub fn new(r: &SurveyReport, duplicates_skipped: u64, predicted: Vec<usize>) -> Self {
        SurveyRecord {
            kind: "survey",
            n: r.n,
            source: r.source.name(),
            graphs_scanned: r.graphs_scanned,
            duplicates_skipped,
            mhc_count: r.mhc_graphs.len(),
            max_degree_spectrum: r.max_degree_spectrum.clone(),
            spectrum_matches_prediction: r.max_degree_spectrum == predicted,
            predicted_max_degree_spectrum: predicted,
            min_degree_spectrum: r.min_degree_spectrum.clone(),
            delta_n_minus_2_absent: !r.max_degree_spectrum.contains(&(r.n.wrapping_sub(2))),
            wheel_unique_at_top: r.wheel_unique_at_top,
            funnel: (&r.stats).into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HuntRecord {
    pub kind: &'static str,
    pub n: usize,
    pub found: bool,
    pub index: Option<usize>,
    pub graph6: Option<String>,
    pub certificate: Option<MhcRecord>,
}

#[derive(Debug, Serialize)]
pub struct StatsRecord {
    pub kind: &'static str,
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub size: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub degree_sequence: Vec<usize>,
    pub connected: bool,
    pub connectivity: Option<usize>,
    pub canonical_graph6: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct SpectrumRecord {
    pub kind: &'static str,
    pub n: usize,
    pub graphs_scanned: u64,
    pub mhc_count: usize,
    pub max_degree_spectrum: Vec<usize>,
    pub predicted_max_degree_spectrum: Vec<usize>,
    pub min_degree_spectrum: Vec<usize>,
    pub wheel_unique_at_top: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use mhc_core::constructions::build_wheel;
    use mhc_core::solver::is_hamiltonian_connected;

    #[test]
    fn field_order_is_fixed() {
        let g = Graph::complete(4).unwrap();
        let r = is_hamiltonian_connected(&g).unwrap();
        assert_eq!(
            to_line(&HcRecord::new(1, &g, &r)),
            r#"{"kind":"hc","line":1,"graph6":"C~","n":4,"is_hc":true,"witness_pairs_checked":6,"failing_pair":null,"pruned_by":null}"#
        );
    }

    #[test]
    fn construction_record() {
        let lg = build_wheel(4).unwrap();
        let line = to_line(&ConstructionRecord::new(&lg));
        assert!(line.starts_with(r#"{"kind":"construction","name":"W4","family":"wheel","n":4,"delta":3"#));
        assert!(line.contains(r#""graph6":"C~""#));
    }
}
