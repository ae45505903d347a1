use super::{
    basic_invariants, check_cap, chromatic_number, clique_number, complete_multipartite,
    domination_stats, independence_number, is_chordal, is_perfect, is_planar, metric_invariants,
    simplicial_vertices, Budget, Chromatic, Extended, GraphError, Label, LabeledGraph,
    PerfectWitness,
};
use serde::Serialize;

/// Oracle-computed properties of one graph; absent entries were not computed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub loop_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eulerian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chromatic_number: Option<Chromatic>,
    /// Inner `None` (serialized as null) means not complete multipartite.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete_multipartite: Option<Option<Vec<Vec<Label>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth: Option<Extended>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter: Option<Extended>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independence_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domination_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_dominating_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_cover_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chordal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chordal_witness: Option<Vec<Label>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub planar: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect_witness: Option<PerfectWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplicial: Option<Vec<Label>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Largest vertex count accepted by the exponential oracles.
    pub oracle_cap: Option<usize>,
    /// Node budget for each exponential search.
    pub budget: Option<u64>,
    /// Skip the exponential oracles entirely.
    pub cheap_only: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            oracle_cap: Some(300),
            budget: None,
            cheap_only: false,
        }
    }
}

/// Runs every oracle. Looped graphs only get counts and the (undefined)
/// chromatic number, since the remaining oracles require loop-free input.
pub fn property_report(g: &LabeledGraph, opts: ReportOptions) -> Result<PropertyReport, GraphError> {
    let mut r = PropertyReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        ..Default::default()
    };
    if g.has_loops() {
        r.loop_count = Some(g.loops().count());
        r.chromatic_number = Some(Chromatic::Undefined);
        return Ok(r);
    }
    let budget = || Budget::from_option(opts.budget);
    let basic = basic_invariants(g)?;
    r.complete = Some(basic.complete);
    r.regular = Some(basic.regular);
    r.connected = Some(basic.connected);
    r.eulerian = Some(basic.eulerian);
    let metric = metric_invariants(g)?;
    r.girth = Some(metric.girth);
    r.diameter = Some(metric.diameter);
    r.complete_multipartite = Some(complete_multipartite(g)?);
    let chordal = is_chordal(g)?;
    r.chordal = Some(chordal.chordal);
    r.chordal_witness = chordal.witness;
    r.planar = Some(is_planar(g)?);
    r.simplicial = Some(simplicial_vertices(g)?);
    if opts.cheap_only {
        return Ok(r);
    }

    check_cap("exponential oracles", g, opts.oracle_cap)?;
    r.clique_number = Some(clique_number(g, None, &mut budget())?);
    r.chromatic_number = Some(chromatic_number(g, &mut budget())?);
    let alpha = independence_number(g, &mut budget())?;
    r.independence_number = Some(alpha);
    r.vertex_cover_number = Some(g.vertex_count() - alpha);
    let dom = domination_stats(g, &mut budget())?;
    r.domination_number = Some(dom.gamma);
    r.min_dominating_count = Some(dom.min_count);
    let perfect = is_perfect(g, &mut budget())?;
    r.perfect = Some(perfect.perfect);
    r.perfect_witness = perfect.witness;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_on_cycle() {
        let r = property_report(&LabeledGraph::cycle(5), ReportOptions::default()).unwrap();
        assert_eq!(r.clique_number, Some(2));
        assert_eq!(r.chromatic_number, Some(Chromatic::Number(3)));
        assert_eq!(r.perfect, Some(false));
        assert_eq!(r.girth, Some(Extended::Finite(5)));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["complete_multipartite"], serde_json::Value::Null);
        assert_eq!(json["perfect_witness"]["kind"], "hole");
    }

    #[test]
    fn report_respects_cap() {
        let opts = ReportOptions {
            oracle_cap: Some(3),
            ..Default::default()
        };
        assert!(property_report(&LabeledGraph::cycle(5), opts).unwrap_err().is_resource());
    }

    #[test]
    fn looped_graph_reports_undefined_coloring() {
        let g = LabeledGraph::from_edges(vec![Label::Int(2)], &[], &[0]).unwrap();
        let r = property_report(&g, ReportOptions::default()).unwrap();
        assert_eq!(r.chromatic_number, Some(Chromatic::Undefined));
        assert_eq!(r.loop_count, Some(1));
    }
}
