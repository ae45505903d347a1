//! Claim registry: each claim pairs a closed form with a graph oracle over a
//! deterministic parameter domain and reports pass or the first
//! counterexample, with a certificate that can be replayed.

use crate::dn::{
    build_dn_graph, dn_degree, dn_report, dn_vertex_count, squarefree_edge_count_printed,
    squarefree_independence_printed,
};
use crate::graph::{
    basic_invariants, chromatic_number, clique_census, clique_number, complete_multipartite,
    domination_stats, find_odd_hole, independence_number, are_isomorphic, is_bipartite,
    is_chordal, is_perfect, is_planar, metric_invariants, simplicial_vertices, Budget, Extended,
    Label, LabeledGraph,
};
use crate::numthy::{factorize, gcd, star_pair, Factorization};
use crate::product::{
    build_product_graph, build_product_type_graph, canonical_type_signature, product_report,
    product_type_labels, vertex_type, ProductDims,
};
use crate::theorems::{
    clique_formula, gamma_formula, self_annihilator_closed, simplicial_set_closed, smith_form,
    zn_report,
};
use crate::zn::{build_ring_graph, build_type_graph, ring_vertices, type_classes};
use crate::{mul_is_zero, Error, Result, DEFAULT_BUILD_CAP};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// One instance of a claim's domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Param {
    N(u64),
    Dims(ProductDims),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Counterexample,
    ResourceLimit,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub parameter: Param,
    pub predicted: Value,
    pub observed: Value,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub claim: String,
    pub instances_checked: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// Every failing parameter, in exhaustive mode only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexamples: Option<Vec<Param>>,
    /// Per-instance observations for claims that record them, or the
    /// parameter and error for a resource limit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<Value>,
}

impl VerificationOutcome {
    /// One JSON object with keys in sorted order.
    pub fn to_json_line(&self) -> String {
        serde_json::to_value(self)
            .expect("outcomes serialize")
            .to_string()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Replaces the lower end of the integer range, or of the per-slot
    /// modulus range for products; fixed lists are filtered instead.
    pub from: Option<u64>,
    /// Upper end, as for `from`.
    pub to: Option<u64>,
    /// Node budget for each exponential search.
    pub budget: Option<u64>,
    /// Keep going past the first counterexample.
    pub exhaustive: bool,
}

#[derive(Debug, Clone, Copy)]
enum Domain {
    Ints { from: u64, to: u64 },
    IntList(&'static [u64]),
    /// Ordered tuples with 2 or 3 slots, each modulus in [from, to], whose
    /// product graph has at most `max_vertices` vertices.
    Products { from: u64, to: u64, max_vertices: u64 },
    DimsList(&'static [&'static [u64]]),
}

impl Domain {
    fn describe(&self) -> String {
        match *self {
            Domain::Ints { from, to } => format!("n in [{from}, {to}]"),
            Domain::IntList(xs) => format!("n in {xs:?}"),
            Domain::Products { from, to, max_vertices } => format!(
                "dims in [{from}, {to}]^k, k in {{2, 3}}, at most {max_vertices} vertices"
            ),
            Domain::DimsList(xs) => format!("dims in {xs:?}"),
        }
    }

    fn params(&self, lo: Option<u64>, hi: Option<u64>) -> Result<Vec<Param>> {
        let within = |x: u64| lo.is_none_or(|a| a <= x) && hi.is_none_or(|b| x <= b);
        Ok(match *self {
            Domain::Ints { from, to } => {
                let (a, b) = (lo.unwrap_or(from), hi.unwrap_or(to));
                (a.max(2)..=b).map(Param::N).collect()
            }
            Domain::IntList(xs) => xs.iter().copied().filter(|&x| within(x)).map(Param::N).collect(),
            Domain::Products { from, to, max_vertices } => {
                let (a, b) = (lo.unwrap_or(from), hi.unwrap_or(to));
                let mut out = Vec::new();
                for k in 2..=3usize {
                    let mut t = vec![a.max(2); k];
                    if t[0] > b {
                        break;
                    }
                    loop {
                        let d = ProductDims::new(t.clone())?;
                        if d.vertex_count()? <= max_vertices {
                            out.push(Param::Dims(d));
                        }
                        let mut i = k;
                        loop {
                            if i == 0 {
                                break;
                            }
                            i -= 1;
                            if t[i] < b {
                                t[i] += 1;
                                t[i + 1..].iter_mut().for_each(|x| *x = a.max(2));
                                i = usize::MAX;
                                break;
                            }
                        }
                        if i != usize::MAX {
                            break;
                        }
                    }
                }
                out
            }
            Domain::DimsList(xs) => xs
                .iter()
                .filter(|d| d.iter().all(|&x| within(x)))
                .map(|d| ProductDims::new(d.to_vec()).map(Param::Dims))
                .collect::<Result<_>>()?,
        })
    }
}

/// Result of one instance.
enum Check {
    /// Outside the claim's hypothesis; not counted.
    Skip,
    Agree,
    /// Agreement, with an observation kept in the outcome.
    Note(Value),
    Disagree {
        predicted: Value,
        observed: Value,
        witness: Value,
    },
}

fn compare<T: Serialize + PartialEq>(predicted: T, observed: T) -> Check {
    if predicted == observed {
        Check::Agree
    } else {
        Check::Disagree {
            predicted: json!(predicted),
            observed: json!(observed),
            witness: Value::Null,
        }
    }
}

fn compare_with<T: Serialize + PartialEq, W: Serialize>(predicted: T, observed: T, witness: W) -> Check {
    match compare(predicted, observed) {
        Check::Disagree { predicted, observed, .. } => Check::Disagree {
            predicted,
            observed,
            witness: json!(witness),
        },
        other => other,
    }
}

/// Passes when `holds`; otherwise reports the two sides of the relation.
fn require<P: Serialize, O: Serialize>(holds: bool, predicted: P, observed: O) -> Check {
    if holds {
        Check::Agree
    } else {
        Check::Disagree {
            predicted: json!(predicted),
            observed: json!(observed),
            witness: Value::Null,
        }
    }
}

struct Ctx {
    budget: Option<u64>,
}

impl Ctx {
    fn b(&self) -> Budget {
        Budget::from_option(self.budget)
    }
}

type IntCheck = fn(&Ctx, u64) -> Result<Check>;
type ProdCheck = fn(&Ctx, &ProductDims) -> Result<Check>;

#[derive(Clone, Copy)]
enum Checker {
    Int(IntCheck),
    Prod(ProdCheck),
}

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    domain: Domain,
    checker: Checker,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub id: &'static str,
    pub description: &'static str,
    pub domain: String,
}

impl Claim {
    pub fn summary(&self) -> ClaimSummary {
        ClaimSummary {
            id: self.id,
            description: self.description,
            domain: self.domain.describe(),
        }
    }
}

fn ring(n: u64) -> Result<LabeledGraph> {
    build_ring_graph(n, Some(DEFAULT_BUILD_CAP))
}

fn ints(labels: &[Label]) -> Vec<u64> {
    labels.iter().filter_map(Label::as_int).collect()
}

fn fact(n: u64) -> Result<Factorization> {
    Ok(factorize(n)?)
}

// ---- Γ(Z_n) ----

fn zn_partition(_: &Ctx, n: u64) -> Result<Check> {
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for v in ring_vertices(n) {
        *counts.entry(gcd(v, n)).or_insert(0) += 1;
    }
    let predicted: BTreeMap<u64, u64> = type_classes(n)?.iter().map(|c| (c.a, c.size)).collect();
    Ok(compare(predicted, counts))
}

fn zn_adjacency_transfer(_: &Ctx, n: u64) -> Result<Check> {
    let classes = type_classes(n)?;
    let members: Vec<Vec<u64>> = classes.iter().map(|c| c.members().collect()).collect();
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate().skip(i + 1) {
            let typed = mul_is_zero(ci.a, cj.a, n);
            for &x in &members[i] {
                for &y in &members[j] {
                    if mul_is_zero(x, y, n) != typed {
                        return Ok(compare_with(typed, !typed, [x, y]));
                    }
                }
            }
        }
    }
    Ok(Check::Agree)
}

fn zn_same_class(_: &Ctx, n: u64) -> Result<Check> {
    let strong = build_type_graph(n, true)?;
    let mut checked = false;
    for c in type_classes(n)? {
        let looped = strong.has_loop(strong.index_of(&Label::Int(c.a)).expect("class label"));
        let m: Vec<u64> = c.members().collect();
        for (i, &x) in m.iter().enumerate() {
            for &y in &m[i + 1..] {
                checked = true;
                if mul_is_zero(x, y, n) != looped {
                    return Ok(compare_with(looped, !looped, [x, y]));
                }
            }
        }
    }
    Ok(if checked { Check::Agree } else { Check::Skip })
}

fn zn_class_sizes(_: &Ctx, n: u64) -> Result<Check> {
    let f = fact(n)?;
    for c in type_classes(n)? {
        let size = c.members().count() as u64;
        if (size == 1) != (2 * c.a == n) {
            return Ok(compare_with(2 * c.a == n, size == 1, json!({"class": c.a, "size": size})));
        }
        if let Some(p) = f.primes().find(|&p| c.a * p == n) {
            if size != p - 1 {
                return Ok(compare_with(p - 1, size, json!({"class": c.a})));
            }
        }
    }
    Ok(Check::Agree)
}

fn zn_single_singleton(_: &Ctx, n: u64) -> Result<Check> {
    let singles: Vec<u64> = type_classes(n)?
        .iter()
        .filter(|c| c.members().nth(1).is_none())
        .map(|c| c.a)
        .collect();
    Ok(if singles.len() <= 1 {
        Check::Agree
    } else {
        Check::Disagree {
            predicted: json!("at most one singleton class"),
            observed: json!(singles.len()),
            witness: json!(singles),
        }
    })
}

fn zn_complete(_: &Ctx, n: u64) -> Result<Check> {
    let g = ring(n)?;
    let observed = g.vertex_count() > 0 && basic_invariants(&g)?.complete;
    Ok(compare(zn_report(n)?.complete, observed))
}

fn zn_strong_coloring(ctx: &Ctx, n: u64) -> Result<Check> {
    let strong = build_type_graph(n, true)?;
    if strong.has_loops() || strong.vertex_count() == 0 {
        return Ok(Check::Skip);
    }
    let k = chromatic_number(&strong, &mut ctx.b())?.number().expect("loop-free");
    let chi = chromatic_number(&ring(n)?, &mut ctx.b())?.number().expect("loop-free");
    Ok(require(chi <= k, json!({"at_most": k}), chi))
}

fn zn_half_loop_coloring(ctx: &Ctx, n: u64) -> Result<Check> {
    let strong = build_type_graph(n, true)?;
    let loops = ints(&strong.labels_of(&strong.loops().collect::<Vec<_>>()));
    if loops != [n / 2] || !n.is_multiple_of(2) {
        return Ok(Check::Skip);
    }
    let weak = build_type_graph(n, false)?;
    let k = chromatic_number(&weak, &mut ctx.b())?.number().expect("loop-free");
    let chi = chromatic_number(&ring(n)?, &mut ctx.b())?.number().expect("loop-free");
    Ok(require(chi <= k, json!({"at_most": k}), chi))
}

fn zn_squarefree_partite(ctx: &Ctx, n: u64) -> Result<Check> {
    let Some(k) = zn_report(n)?.kpartite_k_squarefree else {
        return Ok(Check::Skip);
    };
    let chi = chromatic_number(&ring(n)?, &mut ctx.b())?.number().expect("loop-free");
    Ok(require(chi as u64 <= k, json!({"at_most": k}), chi))
}

fn zn_self_annihilating(_: &Ctx, n: u64) -> Result<Check> {
    for v in ring_vertices(n) {
        let observed = mul_is_zero(v, v, n);
        let predicted = self_annihilator_closed(v, n)?;
        if observed != predicted {
            return Ok(compare_with(predicted, observed, v));
        }
    }
    Ok(Check::Agree)
}

fn zn_anchored_monotone(ctx: &Ctx, n: u64) -> Result<Check> {
    let g = ring(n)?;
    let labels = ints(g.labels());
    let mut anchored: Vec<Option<usize>> = vec![None; labels.len()];
    let mut at = |i: usize| -> Result<usize> {
        if anchored[i].is_none() {
            anchored[i] = Some(clique_number(&g, Some(g.label(i)), &mut ctx.b())?);
        }
        Ok(anchored[i].expect("just filled"))
    };
    for (i, &u) in labels.iter().enumerate() {
        for (j, &v) in labels.iter().enumerate().skip(i + 1) {
            if v % u == 0 {
                let (cu, cv) = (at(i)?, at(j)?);
                if cv < cu {
                    return Ok(Check::Disagree {
                        predicted: json!({"at_least": cu}),
                        observed: json!(cv),
                        witness: json!([u, v]),
                    });
                }
            }
        }
    }
    Ok(Check::Agree)
}

fn zn_clique(ctx: &Ctx, n: u64) -> Result<Check> {
    let observed = clique_number(&ring(n)?, None, &mut ctx.b())? as u64;
    Ok(compare(clique_formula(&fact(n)?), observed))
}

fn zn_regular(_: &Ctx, n: u64) -> Result<Check> {
    let g = ring(n)?;
    let b = basic_invariants(&g)?;
    if g.vertex_count() == 0 || !b.regular {
        return Ok(Check::Skip);
    }
    Ok(compare(true, b.complete))
}

fn zn_chordal(_: &Ctx, n: u64) -> Result<Check> {
    let c = is_chordal(&ring(n)?)?;
    Ok(compare_with(zn_report(n)?.chordal, c.chordal, c.witness))
}

fn zn_simplicial_set(_: &Ctx, n: u64) -> Result<Check> {
    let observed = ints(&simplicial_vertices(&ring(n)?)?);
    let predicted = if fact(n)?.is_prime() { Vec::new() } else { simplicial_set_closed(n)? };
    Ok(compare(predicted, observed))
}

fn zn_simplicial_exists(_: &Ctx, n: u64) -> Result<Check> {
    let observed = !simplicial_vertices(&ring(n)?)?.is_empty();
    Ok(compare(zn_report(n)?.simplicial_exists, observed))
}

fn zn_gamma(ctx: &Ctx, n: u64) -> Result<Check> {
    let observed = domination_stats(&ring(n)?, &mut ctx.b())?.gamma as u64;
    Ok(compare(gamma_formula(&fact(n)?), observed))
}

fn zn_gamma_beta(ctx: &Ctx, n: u64) -> Result<Check> {
    let g = ring(n)?;
    let gamma = domination_stats(&g, &mut ctx.b())?.gamma;
    let beta = g.vertex_count() - independence_number(&g, &mut ctx.b())?;
    Ok(compare_with(
        zn_report(n)?.gamma_beta_perfect,
        gamma == beta,
        json!({"gamma": gamma, "vertex_cover": beta}),
    ))
}

fn zn_min_dominating(ctx: &Ctx, n: u64) -> Result<Check> {
    let Some(predicted) = zn_report(n)?.min_dominating_count else {
        return Ok(Check::Skip);
    };
    let observed = domination_stats(&ring(n)?, &mut ctx.b())?.min_count;
    Ok(compare(predicted, observed))
}

fn zn_smith(ctx: &Ctx, n: u64) -> Result<Check> {
    let p = is_perfect(&build_type_graph(n, false)?, &mut ctx.b())?;
    Ok(compare_with(zn_report(n)?.perfect, p.perfect, p.witness))
}

fn zn_type_perfect(ctx: &Ctx, n: u64) -> Result<Check> {
    let whole = is_perfect(&ring(n)?, &mut ctx.b())?;
    let quotient = is_perfect(&build_type_graph(n, false)?, &mut ctx.b())?;
    Ok(compare_with(quotient.perfect, whole.perfect, whole.witness))
}

const ISO_CAP: usize = 40;

fn zn_prime_exchange(ctx: &Ctx, n: u64) -> Result<Check> {
    let m = fact(n)?.signature().smallest_representative()?;
    if m == n {
        return Ok(Check::Skip);
    }
    let a = build_type_graph(n, false)?;
    let b = build_type_graph(m, false)?;
    if a.vertex_count() > ISO_CAP {
        return Ok(Check::Skip);
    }
    Ok(compare_with(true, are_isomorphic(&a, &b, ISO_CAP, &mut ctx.b())?, json!({"m": m})))
}

fn zn_star_clique(_: &Ctx, n: u64) -> Result<Check> {
    let (star, _) = star_pair(n)?;
    let multiples: Vec<u64> = (1..n / star).map(|k| k * star).collect();
    for (i, &x) in multiples.iter().enumerate() {
        for &y in &multiples[i + 1..] {
            if !mul_is_zero(x, y, n) {
                return Ok(compare_with("clique", "non-adjacent pair", [x, y]));
            }
        }
    }
    for v in ring_vertices(n) {
        if mul_is_zero(v, v, n) && v % star != 0 {
            return Ok(compare_with("contains every self-annihilator", "missing", v));
        }
    }
    Ok(Check::Agree)
}

// ---- products ----

const PRODUCT_BUILD_CAP: Option<usize> = Some(DEFAULT_BUILD_CAP);

fn pgraph(d: &ProductDims) -> Result<LabeledGraph> {
    build_product_graph(d, PRODUCT_BUILD_CAP)
}

fn tuple(l: &Label) -> &[u64] {
    match l {
        Label::Tuple(t) => t,
        Label::Int(_) => unreachable!("product graphs carry tuple labels"),
    }
}

fn prod_partition(_: &Ctx, d: &ProductDims) -> Result<Check> {
    let g = pgraph(d)?;
    let types = product_type_labels(d)?;
    let mut counts: BTreeMap<Vec<u64>, u64> = types.iter().map(|t| (t.clone(), 0)).collect();
    for l in g.labels() {
        match counts.get_mut(&vertex_type(d, tuple(l))) {
            Some(c) => *c += 1,
            None => return Ok(compare_with("a type label", "no type", l)),
        }
    }
    if let Some((t, _)) = counts.iter().find(|(_, &c)| c == 0) {
        return Ok(compare_with("nonempty class", "empty class", t));
    }
    Ok(Check::Agree)
}

fn prod_adjacency_transfer(_: &Ctx, d: &ProductDims) -> Result<Check> {
    let g = pgraph(d)?;
    let types: Vec<Vec<u64>> = g.labels().iter().map(|l| vertex_type(d, tuple(l))).collect();
    for i in 0..g.vertex_count() {
        for j in i + 1..g.vertex_count() {
            let typed = types[i]
                .iter()
                .zip(&types[j])
                .zip(d.dims())
                .all(|((&x, &y), &n)| mul_is_zero(x, y, n));
            if g.adjacent(i, j) != typed {
                return Ok(compare_with(typed, !typed, [g.label(i), g.label(j)]));
            }
        }
    }
    Ok(Check::Agree)
}

fn prod_type_perfect(ctx: &Ctx, d: &ProductDims) -> Result<Check> {
    let t = build_product_type_graph(d, None)?;
    if t.vertex_count() > 30 {
        return Ok(Check::Skip);
    }
    let whole = is_perfect(&pgraph(d)?, &mut ctx.b())?;
    let quotient = is_perfect(&t, &mut ctx.b())?;
    Ok(compare_with(quotient.perfect, whole.perfect, whole.witness))
}

fn prod_prime_exchange(ctx: &Ctx, d: &ProductDims) -> Result<Check> {
    let replaced = d
        .dims()
        .iter()
        .map(|&n| Ok(fact(n)?.signature().smallest_representative()?))
        .collect::<Result<Vec<_>>>()?;
    let e = ProductDims::new(replaced)?;
    if &e == d {
        return Ok(Check::Skip);
    }
    debug_assert_eq!(canonical_type_signature(d)?, canonical_type_signature(&e)?);
    let a = build_product_type_graph(d, Some(ISO_CAP))?;
    let b = build_product_type_graph(&e, Some(ISO_CAP))?;
    Ok(compare_with(true, are_isomorphic(&a, &b, ISO_CAP, &mut ctx.b())?, &e))
}

fn prod_crt_collapse(ctx: &Ctx, d: &ProductDims) -> Result<Check> {
    let dims = d.dims();
    let coprime = (0..dims.len()).all(|i| (i + 1..dims.len()).all(|j| gcd(dims[i], dims[j]) == 1));
    if !coprime {
        return Ok(Check::Skip);
    }
    let n: u64 = dims.iter().product();
    let a = build_product_type_graph(d, None)?;
    if a.vertex_count() > ISO_CAP {
        return Ok(Check::Skip);
    }
    let b = build_type_graph(n, false)?;
    Ok(compare_with(true, are_isomorphic(&a, &b, ISO_CAP, &mut ctx.b())?, json!({"n": n})))
}

fn prod_perfect(ctx: &Ctx, d: &ProductDims) -> Result<Check> {
    let p = is_perfect(&build_product_type_graph(d, None)?, &mut ctx.b())?;
    Ok(compare_with(product_report(d)?.perfect, p.perfect, p.witness))
}

fn prod_complete(_: &Ctx, d: &ProductDims) -> Result<Check> {
    let g = pgraph(d)?;
    let observed = g.vertex_count() > 0 && basic_invariants(&g)?.complete;
    Ok(compare(product_report(d)?.complete, observed))
}

fn prod_complete_bipartite(_: &Ctx, d: &ProductDims) -> Result<Check> {
    let Some(predicted) = product_report(d)?.complete_bipartite else {
        return Ok(Check::Skip);
    };
    let observed = complete_multipartite(&pgraph(d)?)?.is_some_and(|parts| parts.len() == 2);
    Ok(compare(predicted, observed))
}

fn prod_bipartite(_: &Ctx, d: &ProductDims) -> Result<Check> {
    let Some(predicted) = product_report(d)?.bipartite else {
        return Ok(Check::Skip);
    };
    Ok(compare(predicted, is_bipartite(&pgraph(d)?)?))
}

fn prod_imperfect_factor(ctx: &Ctx, d: &ProductDims) -> Result<Check> {
    let imperfect = d
        .dims()
        .iter()
        .map(|&n| Ok(!smith_form(&fact(n)?.signature())))
        .collect::<Result<Vec<_>>>()?;
    if !imperfect.contains(&true) {
        return Ok(Check::Skip);
    }
    let p = is_perfect(&pgraph(d)?, &mut ctx.b())?;
    Ok(compare_with(false, p.perfect, p.witness))
}

const NAMED_HOLE: [[u64; 5]; 5] = [
    [1, 1, 0, 0, 0],
    [0, 0, 1, 1, 0],
    [1, 0, 0, 0, 1],
    [0, 1, 1, 0, 0],
    [0, 0, 0, 1, 1],
];

fn prod_named_hole(ctx: &Ctx, d: &ProductDims) -> Result<Check> {
    if d.dims() != [2, 2, 2, 2, 2] {
        return Ok(Check::Skip);
    }
    let g = pgraph(d)?;
    let idx: Vec<usize> = NAMED_HOLE
        .iter()
        .map(|t| g.index_of(&Label::Tuple(t.to_vec())).expect("named vertices exist"))
        .collect();
    let found = find_odd_hole(&g, 5, &mut ctx.b())?;
    let ok = g.is_induced_cycle(&idx) && found.is_some();
    Ok(compare_with(true, ok, found))
}

fn prod_not_regular(_: &Ctx, d: &ProductDims) -> Result<Check> {
    if d.dims().iter().all(|&n| crate::numthy::is_prime(n)) {
        return Ok(Check::Skip);
    }
    Ok(compare(false, basic_invariants(&pgraph(d)?)?.regular))
}

fn prod_clique_bound(ctx: &Ctx, d: &ProductDims) -> Result<Check> {
    let Some(bound) = product_report(d)?.clique_lower_bound else {
        return Ok(Check::Skip);
    };
    let cl = clique_number(&pgraph(d)?, None, &mut ctx.b())? as u64;
    Ok(require(cl >= bound, json!({"at_least": bound}), cl))
}

fn prod_simplicial(_: &Ctx, d: &ProductDims) -> Result<Check> {
    let observed = !simplicial_vertices(&pgraph(d)?)?.is_empty();
    Ok(compare(product_report(d)?.simplicial_exists, observed))
}

fn prod_chordal(_: &Ctx, d: &ProductDims) -> Result<Check> {
    let c = is_chordal(&pgraph(d)?)?;
    Ok(compare_with(product_report(d)?.chordal, c.chordal, c.witness))
}

fn prod_domination(ctx: &Ctx, d: &ProductDims) -> Result<Check> {
    let (lo, hi) = product_report(d)?.domination_bounds;
    let gamma = domination_stats(&pgraph(d)?, &mut ctx.b())?.gamma as u64;
    Ok(require(lo <= gamma && gamma <= hi, json!({"between": [lo, hi]}), gamma))
}

fn prod_prime_partite(ctx: &Ctx, d: &ProductDims) -> Result<Check> {
    let Some(k) = product_report(d)?.k_partite_k else {
        return Ok(Check::Skip);
    };
    let chi = chromatic_number(&pgraph(d)?, &mut ctx.b())?.number().expect("loop-free");
    Ok(require(chi <= k, json!({"at_most": k}), chi))
}

// ---- D_n ----

const DN_MAX_VERTICES: u64 = 120;

/// The D_n graph when n has two or more primes and the graph is small enough.
fn dn_instance(n: u64) -> Result<Option<(Factorization, LabeledGraph)>> {
    let f = fact(n)?;
    if f.omega() < 2 || dn_vertex_count(&f) > DN_MAX_VERTICES {
        return Ok(None);
    }
    let g = build_dn_graph(n, None)?;
    Ok(Some((f, g)))
}

macro_rules! dn_instance {
    ($n:expr) => {
        match dn_instance($n)? {
            Some(x) => x,
            None => return Ok(Check::Skip),
        }
    };
}

fn dn_trivial(_: &Ctx, n: u64) -> Result<Check> {
    let f = fact(n)?;
    if !f.is_prime_power() {
        return Ok(Check::Skip);
    }
    let g = build_dn_graph(n, None)?;
    Ok(compare((true, 0), (dn_report(n)?.trivial, g.vertex_count())))
}

fn dn_diameter(_: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    let predicted = dn_report(n)?.diameter_class.map(Extended::Finite);
    Ok(compare(predicted, Some(metric_invariants(&g)?.diameter)))
}

fn dn_complete(_: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    let r = dn_report(n)?;
    let complete = basic_invariants(&g)?.complete;
    let bipartite = complete_multipartite(&g)?.is_some_and(|p| p.len() == 2);
    Ok(compare((r.complete, r.complete_bipartite), (complete, bipartite)))
}

fn dn_cliques(ctx: &Ctx, n: u64) -> Result<Check> {
    let (f, g) = dn_instance!(n);
    let r = dn_report(n)?;
    let k = f.omega();
    let census = clique_census(&g, k + 1, &mut ctx.b())?;
    let observed = (
        clique_number(&g, None, &mut ctx.b())? as u64,
        census.get(&k).copied(),
        census.get(&(k - 1)).copied(),
    );
    Ok(compare((r.clique_number, r.clique_leading_coeff, r.clique_second_coeff), observed))
}

fn dn_domination(ctx: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    Ok(compare(dn_report(n)?.domination, domination_stats(&g, &mut ctx.b())?.gamma as u64))
}

fn dn_regular(_: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    Ok(compare(dn_report(n)?.regular, basic_invariants(&g)?.regular))
}

fn dn_girth(_: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    Ok(compare(dn_report(n)?.girth_class, Some(metric_invariants(&g)?.girth)))
}

fn dn_perfect(ctx: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    let p = is_perfect(&g, &mut ctx.b())?;
    Ok(compare_with(dn_report(n)?.perfect, p.perfect, p.witness))
}

fn dn_chordal(_: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    let c = is_chordal(&g)?;
    Ok(compare_with(dn_report(n)?.chordal, c.chordal, c.witness))
}

fn dn_simplicial(_: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    Ok(compare(dn_report(n)?.simplicial, ints(&simplicial_vertices(&g)?)))
}

fn dn_planar(_: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    Ok(compare(dn_report(n)?.planar, is_planar(&g)?))
}

fn dn_eulerian(_: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    Ok(compare(dn_report(n)?.eulerian, basic_invariants(&g)?.eulerian))
}

fn squarefree_instance(n: u64) -> Result<Option<(Factorization, LabeledGraph)>> {
    let f = fact(n)?;
    if !f.is_square_free() || f.omega() < 2 {
        return Ok(None);
    }
    dn_instance(n)
}

macro_rules! squarefree_instance {
    ($n:expr) => {
        match squarefree_instance($n)? {
            Some(x) => x,
            None => return Ok(Check::Skip),
        }
    };
}

fn dn_edge_count(_: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = squarefree_instance!(n);
    Ok(compare(dn_report(n)?.edge_count_squarefree, Some(g.edge_count() as u64)))
}

fn dn_edge_count_printed(_: &Ctx, n: u64) -> Result<Check> {
    let (f, g) = squarefree_instance!(n);
    Ok(compare(squarefree_edge_count_printed(f.omega() as u32), g.edge_count() as i64))
}

fn dn_independence(ctx: &Ctx, n: u64) -> Result<Check> {
    let (_, g) = dn_instance!(n);
    let bound = dn_report(n)?.independence_lower_bound;
    let alpha = independence_number(&g, &mut ctx.b())? as u64;
    Ok(require(bound <= alpha, json!({"at_most": alpha}), bound))
}

fn dn_independence_squarefree(ctx: &Ctx, n: u64) -> Result<Check> {
    let (f, g) = squarefree_instance!(n);
    let r = f.omega() as u32;
    if r < 3 {
        return Ok(Check::Skip);
    }
    let alpha = independence_number(&g, &mut ctx.b())? as u64;
    let bound = (1u64 << (r - 1)) - 1;
    Ok(require(bound <= alpha, json!({"at_least": bound}), alpha))
}

/// The printed bound 2^{r−1} − r holds, and falls short of the observed
/// independence number by exactly r − 1.
fn dn_independence_printed(ctx: &Ctx, n: u64) -> Result<Check> {
    let (f, g) = squarefree_instance!(n);
    let r = f.omega() as u32;
    if !(3..=4).contains(&r) {
        return Ok(Check::Skip);
    }
    let alpha = independence_number(&g, &mut ctx.b())? as u64;
    let printed = squarefree_independence_printed(r);
    let holds = printed <= alpha && alpha - printed == r as u64 - 1;
    if !holds {
        return Ok(Check::Disagree {
            predicted: json!({"bound": printed, "slack": r - 1}),
            observed: json!(alpha),
            witness: Value::Null,
        });
    }
    Ok(Check::Note(json!({
        "n": n,
        "r": r,
        "printed_bound": printed,
        "observed": alpha,
        "slack": alpha - printed,
    })))
}

fn dn_domination_printed(ctx: &Ctx, n: u64) -> Result<Check> {
    let (f, g) = dn_instance!(n);
    Ok(compare(f.omega(), domination_stats(&g, &mut ctx.b())?.gamma))
}

/// Girth as printed: infinite only for p^m q with m > 1.
fn dn_girth_printed(_: &Ctx, n: u64) -> Result<Check> {
    let (f, g) = dn_instance!(n);
    let exps: Vec<u32> = f.signature().0;
    let predicted = match exps.as_slice() {
        [m, 1] if *m > 1 => Extended::Infinite,
        [_, s] if *s > 1 => Extended::Finite(4),
        _ => Extended::Finite(3),
    };
    Ok(compare(predicted, metric_invariants(&g)?.girth))
}

fn dn_degrees(_: &Ctx, n: u64) -> Result<Check> {
    let (f, g) = dn_instance!(n);
    for (i, l) in g.labels().iter().enumerate() {
        let d = l.as_int().expect("integer labels");
        let predicted = dn_degree(&f, d);
        if predicted != g.degree(i) as u64 {
            return Ok(compare_with(predicted, g.degree(i) as u64, d));
        }
    }
    Ok(Check::Agree)
}

// ---- registry ----

const fn ints_from(from: u64, to: u64) -> Domain {
    Domain::Ints { from, to }
}

const PRODUCTS: Domain = Domain::Products { from: 2, to: 16, max_vertices: 60 };

macro_rules! claim {
    ($id:expr, $desc:expr, $domain:expr, Int $f:expr) => {
        Claim { id: $id, description: $desc, domain: $domain, checker: Checker::Int($f) }
    };
    ($id:expr, $desc:expr, $domain:expr, Prod $f:expr) => {
        Claim { id: $id, description: $desc, domain: $domain, checker: Checker::Prod($f) }
    };
}

/// Every registered claim, in a fixed order.
pub fn registry() -> Vec<Claim> {
    vec![
        claim!("zn.thm1.1", "type classes partition the vertices, with |T_a| = phi(n/a)", ints_from(2, 10_000), Int zn_partition),
        claim!("zn.thm1.2", "adjacency between two type classes is all or nothing and matches the type graph", ints_from(2, 500), Int zn_adjacency_transfer),
        claim!("zn.lemma2.0", "members of one class are adjacent iff the class carries a loop in the strong type graph", ints_from(2, 500), Int zn_same_class),
        claim!("zn.lemma2.7", "a class is a singleton iff a = n/2; T_{n/p} has p - 1 members", ints_from(2, 10_000), Int zn_class_sizes),
        claim!("zn.lemma2.8", "at most one type class is a singleton", ints_from(2, 10_000), Int zn_single_singleton),
        claim!("zn.thm2.3", "the graph is complete iff n = p^2", ints_from(2, 500), Int zn_complete),
        claim!("zn.thm2.4", "a loop-free strong type graph with chromatic number k bounds the chromatic number by k", ints_from(2, 500), Int zn_strong_coloring),
        claim!("zn.thm2.6", "for square-free n with k primes the graph is k-partite", ints_from(2, 500), Int zn_squarefree_partite),
        claim!("zn.thm2.9", "when the only loop is at n/2, the weak type graph's chromatic number bounds the graph's", ints_from(2, 500), Int zn_half_loop_coloring),
        claim!("zn.lemma2.10", "v^2 = 0 iff n* divides v", ints_from(2, 10_000), Int zn_self_annihilating),
        claim!("zn.lemma2.11", "u | v implies the largest clique through v is at least the largest through u", ints_from(2, 150), Int zn_anchored_monotone),
        claim!("zn.thm2.14", "clique number = n/n* + (primes with odd exponent) - 1", ints_from(2, 300), Int zn_clique),
        claim!("zn.thm2.15", "a nonempty regular graph is complete", ints_from(2, 1000), Int zn_regular),
        claim!("zn.thm2.16", "chordal iff n = p^x, 2p or 2p^2", ints_from(2, 400), Int zn_chordal),
        claim!("zn.lemma2.18", "simplicial vertices are T_2 and the T_g with g | n_+", ints_from(2, 300), Int zn_simplicial_set),
        claim!("zn.thm2.19", "a simplicial vertex exists iff n is composite and even or not square-free", ints_from(2, 300), Int zn_simplicial_exists),
        claim!("zn.lemma2.20", "domination number: 0 for primes, 1 for prime powers, else the number of primes", ints_from(2, 150), Int zn_gamma),
        claim!("zn.thm2.21", "domination number equals vertex cover number iff n is 8, 9, p, 2p or 3p", ints_from(2, 150), Int zn_gamma_beta),
        claim!("zn.smith", "the type graph is perfect iff n is p^a, p^a q^b, p^a q r or pqrs", ints_from(2, 400), Int zn_smith),
        claim!("zn.thm1.8", "the graph is perfect iff its type graph is perfect", ints_from(2, 200), Int zn_type_perfect),
        claim!("zn.thm1.9", "type graphs of equal prime signature are isomorphic", ints_from(2, 2000), Int zn_prime_exchange),
        claim!("zn.lemma3.7", "the nonzero multiples of n* form a clique containing every self-annihilating vertex", ints_from(2, 2000), Int zn_star_clique),
        claim!("prod.thm1.1a", "type classes partition the product graph's vertices, each class nonempty", PRODUCTS, Prod prod_partition),
        claim!("prod.thm1.2a", "product adjacency depends only on the type labels", PRODUCTS, Prod prod_adjacency_transfer),
        claim!("prod.thm1.8", "a product graph is perfect iff its type graph is perfect", PRODUCTS, Prod prod_type_perfect),
        claim!("prod.thm1.10", "replacing primes slotwise preserves the type graph up to isomorphism", PRODUCTS, Prod prod_prime_exchange),
        claim!("prod.thm1.11", "for coprime moduli the product type graph is the type graph of the product modulus", PRODUCTS, Prod prod_crt_collapse),
        claim!("prod.thm1.12", "a product is perfect iff its combined signature has one of the four perfect forms", PRODUCTS, Prod prod_perfect),
        claim!("prod.thm3.1", "a product graph is complete iff the moduli are (2, 2)", PRODUCTS, Prod prod_complete),
        claim!("prod.thm3.2", "a two-factor product is complete bipartite iff both moduli are prime", PRODUCTS, Prod prod_complete_bipartite),
        claim!("prod.thm3.3", "a two-factor product is bipartite iff both moduli are prime, or one is prime and the other 4", PRODUCTS, Prod prod_bipartite),
        claim!("prod.thm3.4", "an imperfect factor makes the product imperfect", Domain::DimsList(&[&[180, 2], &[180, 3], &[252, 2], &[300, 2]]), Prod prod_imperfect_factor),
        claim!("prod.note3.4", "the graph of Z_2^5 contains the 5-hole (11000, 00110, 10001, 01100, 00011)", Domain::DimsList(&[&[2, 2, 2, 2, 2]]), Prod prod_named_hole),
        claim!("prod.thm3.5", "a product with a nonempty factor graph is not regular", PRODUCTS, Prod prod_not_regular),
        claim!("prod.thm3.8", "clique number of a two-factor product is at least cl(n) + cl(m) + (n/n* - 1)(m/m* - 1)", PRODUCTS, Prod prod_clique_bound),
        claim!("prod.thm3.11", "a product has a simplicial vertex iff some factor graph has one or some modulus is 2", PRODUCTS, Prod prod_simplicial),
        claim!("prod.thm3.16", "chordal products are exactly (2, p), (2, p^2) and (2, 2, 2)", Domain::Products { from: 2, to: 16, max_vertices: 80 }, Prod prod_chordal),
        claim!("prod.thm3.19", "sum of factor domination numbers <= product domination number <= twice that sum", PRODUCTS, Prod prod_domination),
        claim!("prod.thm3.20", "with three or more primes the minimum dominating sets number prod(p_i - 1)", Domain::IntList(&[30, 42, 60, 66, 70, 105]), Int zn_min_dominating),
        claim!("prod.thm3.21", "a product of k prime fields is k-partite", PRODUCTS, Prod prod_prime_partite),
        claim!("dn.itemi", "the divisor graph of a prime power is empty", ints_from(2, 2000), Int dn_trivial),
        claim!("dn.itemii", "diameter 3 with three or more primes, else 1 for pq and 2 otherwise", ints_from(2, 2000), Int dn_diameter),
        claim!("dn.itemiii", "complete iff n = pq; complete bipartite iff n has two primes", ints_from(2, 2000), Int dn_complete),
        claim!("dn.itemiv", "clique number r, with r-cliques and (r-1)-cliques counted in closed form", ints_from(2, 2000), Int dn_cliques),
        claim!("dn.itemv", "domination number r, except 1 when n = p^m q", ints_from(2, 2000), Int dn_domination),
        claim!("dn.itemvi", "regular iff n = (pq)^m", ints_from(2, 2000), Int dn_regular),
        claim!("dn.itemvii", "girth infinite for p^m q, 4 for p^m q^s with m, s > 1, else 3", ints_from(2, 2000), Int dn_girth),
        claim!("dn.itemviii", "perfect iff n has at most four primes", ints_from(2, 2000), Int dn_perfect),
        claim!("dn.itemix", "chordal iff n = p^m q or pqr", ints_from(2, 2000), Int dn_chordal),
        claim!("dn.itemx", "simplicial vertices miss exactly one prime, and that prime has exponent 1", ints_from(2, 2000), Int dn_simplicial),
        claim!("dn.itemxi", "planar iff n = p^m q, p^m q^2, pqr or p^2 qr", ints_from(2, 2000), Int dn_planar),
        claim!("dn.itemxii", "Eulerian iff every exponent is even", ints_from(2, 2000), Int dn_eulerian),
        claim!("dn.itemxiii", "square-free n with r primes has (3^r - 2^(r+1) + 1)/2 edges", ints_from(2, 2310), Int dn_edge_count),
        claim!("dn.itemxiv", "independence number is at least the number of vertices divisible by a single prime", ints_from(2, 2000), Int dn_independence),
        claim!("dn.itemxv", "square-free n with r >= 3 primes has independence number at least 2^(r-1) - 1", ints_from(2, 2310), Int dn_independence_squarefree),
        claim!("dn.degree", "deg(d) = prod over primes not dividing d of (alpha + 1), minus 1", ints_from(2, 2000), Int dn_degrees),
        claim!("dn.v.paper-form", "domination number equals the number of primes, as printed", ints_from(2, 2000), Int dn_domination_printed),
        claim!("dn.vii.paper-form", "girth infinite only for p^m q with m > 1, as printed", ints_from(2, 2000), Int dn_girth_printed),
        claim!("dn.xiii.paper-form", "square-free edge count as printed: sum 2^(r-i-1) C(r,i) - 2^(r-1) - 1", ints_from(2, 2310), Int dn_edge_count_printed),
        claim!("dn.xv.paper-form", "square-free independence bound as printed, 2^(r-1) - r, holds with slack r - 1", ints_from(2, 2310), Int dn_independence_printed),
    ]
}

pub fn list_claims() -> Vec<ClaimSummary> {
    registry().iter().map(Claim::summary).collect()
}

pub fn find_claim(id: &str) -> Result<Claim> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::Invalid(format!("unknown claim {id:?}")))
}

pub fn run_claim(id: &str, opts: RunOptions) -> Result<VerificationOutcome> {
    let claim = find_claim(id)?;
    let ctx = Ctx { budget: opts.budget };
    let mut outcome = VerificationOutcome {
        claim: claim.id.to_string(),
        instances_checked: 0,
        status: Status::Pass,
        certificate: None,
        counterexamples: opts.exhaustive.then(Vec::new),
        note: None,
    };
    let mut notes = Vec::new();
    for param in claim.domain.params(opts.from, opts.to)? {
        let result = match (&claim.checker, &param) {
            (Checker::Int(f), Param::N(n)) => f(&ctx, *n),
            (Checker::Prod(f), Param::Dims(d)) => f(&ctx, d),
            _ => unreachable!("domains match their checkers"),
        };
        let check = match result {
            Ok(c) => c,
            Err(e) if e.is_resource() => {
                outcome.status = Status::ResourceLimit;
                outcome.note = Some(json!({"parameter": param, "error": e.to_string()}));
                return Ok(outcome);
            }
            Err(e) => return Err(e),
        };
        match check {
            Check::Skip => continue,
            Check::Agree => {}
            Check::Note(v) => notes.push(v),
            Check::Disagree { predicted, observed, witness } => {
                outcome.status = Status::Counterexample;
                if outcome.certificate.is_none() {
                    outcome.certificate = Some(Certificate {
                        parameter: param.clone(),
                        predicted,
                        observed,
                        witness,
                    });
                }
                match outcome.counterexamples.as_mut() {
                    Some(all) => all.push(param),
                    None => {
                        outcome.instances_checked += 1;
                        return Ok(outcome);
                    }
                }
            }
        }
        outcome.instances_checked += 1;
    }
    if !notes.is_empty() {
        outcome.note = Some(Value::Array(notes));
    }
    Ok(outcome)
}

/// Runs every claim in registry order with the given options.
pub fn run_all(opts: RunOptions) -> Result<Vec<VerificationOutcome>> {
    registry().iter().map(|c| run_claim(c.id, opts)).collect()
}
