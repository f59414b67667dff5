use std::time::Instant;

use crate::canon::is_isomorphic;
use crate::corpus::{all_graphs_up_to_iso, connected_graphs_in_range, GENERATION_CAP};
use crate::domination::{
    domination_number, enumerate_maximal_independent_sets, enumerate_minimal_dominating_sets,
    find_open_irredundant_gamma_set, independence_number, is_dominating, is_minimal_dominating,
    is_well_covered, is_well_dominated,
};
use crate::error::{Error, Result};
use crate::families::{complete, complete_bipartite, family_f1, family_f2, path, LeafCounts};
use crate::graph::Graph;
use crate::product::cartesian_product;
use crate::set::VertexSet;

use super::gadgets::{
    gadget_bipartite_sets, gadget_f1_sets, gadget_f2_sets, gadget_lemma7_set, gadget_star_sets,
    reduce_to_minimal,
};
use super::report::{describe, pair_label, Instance, SweepConfig, SweepReport, Witness, WitnessKind};

/// Every claim id, in the order `verify all` runs them.
pub const CLAIM_IDS: &[&str] = &[
    "obs-residual",
    "obs-connected",
    "obs-components",
    "obs-product-reduction",
    "thm-wc-factor",
    "lemma-girth4",
    "prop-domfactors",
    "lemma-path3",
    "lemma-bipartite",
    "lemma-spwd",
    "thm-girth4-products",
    "thm-factor-wd",
    "thm-wdcart",
    "thm-main",
    "corollary",
];

/// Default factor-order bound per claim, and the largest accepted one.
fn order_bounds(claim: &str) -> Option<(usize, usize)> {
    Some(match claim {
        "obs-residual" => (7, GENERATION_CAP),
        "obs-connected" => (5, 5),
        "obs-components" => (7, GENERATION_CAP),
        "obs-product-reduction" => (5, 5),
        "thm-wc-factor" => (5, 5),
        "lemma-girth4" => (5, 5),
        "prop-domfactors" => (5, 5),
        "lemma-path3" => (6, 6),
        "lemma-bipartite" => (6, 6),
        "lemma-spwd" => (6, 6),
        "thm-girth4-products" => (6, 6),
        "thm-factor-wd" => (5, 5),
        "thm-wdcart" => (6, 6),
        "thm-main" => (6, 6),
        "corollary" => (6, 6),
        _ => return None,
    })
}

const MAX_M: usize = 4;
const MAX_S: usize = 4;
const MAX_LEAVES: usize = 3;

/// Runs one claim. `max_order` overrides the claim's default factor bound.
pub fn run_claim(claim: &str, max_order: Option<usize>, cfg: &SweepConfig) -> Result<SweepReport> {
    let (default, _) =
        order_bounds(claim).ok_or_else(|| Error::Input(format!("unknown claim id {claim:?}")))?;
    let k = max_order.unwrap_or(default);
    match claim {
        "obs-residual" => verify_obs_residual(k, cfg),
        "obs-connected" => verify_obs_connected(k, cfg),
        "obs-components" => verify_obs_components(k, cfg),
        "obs-product-reduction" => verify_product_reduction(k, cfg),
        "thm-wc-factor" => verify_thm_wc_factor(k, cfg),
        "lemma-girth4" => verify_lemma_girth4_products(k, cfg),
        "prop-domfactors" => verify_prop_domfactors(k, cfg),
        "lemma-path3" => verify_lemma_path3(k, cfg),
        "lemma-bipartite" => verify_lemma_bipartite(MAX_S, MAX_S, k, cfg),
        "lemma-spwd" => verify_lemma_spwd(MAX_LEAVES, k, cfg),
        "thm-girth4-products" => verify_thm_girth4_products(k, cfg),
        "thm-factor-wd" => verify_thm_factor_wd(k, cfg),
        "thm-wdcart" => verify_thm_wdcart(MAX_M, k, cfg),
        "thm-main" => verify_main_theorem(k, cfg),
        "corollary" => verify_corollary(k, cfg),
        _ => unreachable!("checked by order_bounds"),
    }
}

/// Runs every claim. A `max_order` above a claim's limit is clamped to it.
pub fn run_all(max_order: Option<usize>, cfg: &SweepConfig) -> Result<Vec<SweepReport>> {
    CLAIM_IDS
        .iter()
        .map(|&id| {
            let (default, cap) = order_bounds(id).expect("listed");
            run_claim(id, Some(max_order.unwrap_or(default).min(cap)), cfg)
        })
        .collect()
}

fn check_bound(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        return Err(Error::Capacity {
            what,
            requested: got,
            limit,
        });
    }
    Ok(())
}

fn corpus(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    if hi < lo {
        return Ok(Vec::new());
    }
    connected_graphs_in_range(lo, hi)
}

fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

fn unordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

fn iso(g: &Graph, h: &Graph) -> bool {
    is_isomorphic(g, h).unwrap_or(false)
}

fn is_p3(g: &Graph) -> bool {
    iso(g, &path(3).expect("valid"))
}

fn is_k(g: &Graph, n: usize) -> bool {
    g.order() == n && g.is_complete()
}

/// `{G, H} = {P3, K3}` or `G ≅ H ≅ K_n`.
fn characterised(g: &Graph, h: &Graph) -> bool {
    (is_p3(g) && is_k(h, 3))
        || (is_k(g, 3) && is_p3(h))
        || (g.is_complete() && h.is_complete() && g.order() == h.order())
}

/// One instance checking whether `g □ h` is well-dominated.
fn wd_instance(g: &Graph, h: &Graph, expected: bool) -> Result<Instance> {
    let (p, _) = cartesian_product(g, h)?;
    let r = is_well_dominated(&p)?;
    Ok(
        Instance::new(pair_label(g, h), &[g, h], p.order(), "well-dominated", r.verdict, expected)?
            .with_witness(Witness::domination(&r)),
    )
}

fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    fn grow(g: &Graph, cur: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(cur);
        let mut rest = cand;
        for v in cand {
            rest.remove(v);
            grow(g, cur.with(v), rest - g.nbhd(v), out);
        }
    }
    let mut out = Vec::new();
    grow(g, VertexSet::EMPTY, g.vertices(), &mut out);
    out
}

fn finish(
    claim: &str,
    params: &[(&str, usize)],
    start: Instant,
    instances: Vec<Vec<Instance>>,
) -> SweepReport {
    SweepReport::new(claim, params, instances.into_iter().flatten().collect(), start.elapsed())
}

/// Residual closure: removing `N[I]` from a well-dominated graph leaves a
/// well-dominated graph. Inputs are the well-dominated connected corpus
/// graphs plus a few well-dominated products larger than the corpus.
pub fn verify_obs_residual(max_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_order, GENERATION_CAP)?;
    let start = Instant::now();
    let mut inputs = Vec::new();
    for g in corpus(1, max_order)? {
        if is_well_dominated(&g)?.verdict {
            inputs.push(g);
        }
    }
    for (a, b) in [(2, 2), (3, 3), (4, 4)] {
        inputs.push(cartesian_product(&complete(a)?, &complete(b)?)?.0);
    }
    inputs.push(cartesian_product(&path(3)?, &complete(3)?)?.0);
    let instances = cfg.map(&inputs, |g| {
        let mut failure = None;
        for i in independent_sets(g) {
            let (res, _) = g.remove_closed_neighborhood(i)?;
            if res.order() == 0 {
                continue;
            }
            let r = is_well_dominated(&res)?;
            if !r.verdict {
                let mut w = Witness::domination(&r);
                w.note = Some(format!("residual after removing N[{i}], vertices renumbered in order"));
                failure = Some(w);
                break;
            }
        }
        let inst = Instance::new(
            describe(g),
            &[g],
            g.order(),
            "every nonempty residual well-dominated",
            failure.is_none(),
            true,
        )?;
        Ok(vec![match failure {
            Some(w) => inst.with_witness(w),
            None => inst,
        }])
    })?;
    Ok(finish("obs-residual", &[("max_order", max_order)], start, instances))
}

/// `G □ H` is connected exactly when both factors are, over all graphs.
pub fn verify_obs_connected(max_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_order, 5)?;
    let start = Instant::now();
    let mut gs = Vec::new();
    for n in 1..=max_order {
        gs.extend(all_graphs_up_to_iso(n)?);
    }
    let instances = cfg.map(&ordered_pairs(gs.len()), |&(i, j)| {
        let (g, h) = (&gs[i], &gs[j]);
        let (p, _) = cartesian_product(g, h)?;
        let pc = p.is_connected()?;
        let fc = g.is_connected()? && h.is_connected()?;
        let inst = Instance::new(pair_label(g, h), &[g, h], p.order(), "connected iff factors connected", pc == fc, true)?;
        Ok(vec![if pc == fc {
            inst
        } else {
            inst.with_witness(Witness::note(
                WitnessKind::Mismatch,
                format!("product connected = {pc}, factors connected = {fc}"),
            ))
        }])
    })?;
    Ok(finish("obs-connected", &[("max_order", max_order)], start, instances))
}

/// A graph is well-dominated exactly when every component is, over all
/// graphs of the given orders.
pub fn verify_obs_components(max_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_order, GENERATION_CAP)?;
    let start = Instant::now();
    let mut gs = Vec::new();
    for n in 1..=max_order {
        gs.extend(all_graphs_up_to_iso(n)?);
    }
    let instances = cfg.map(&gs, |g| {
        let whole = is_well_dominated(g)?;
        let mut parts = true;
        for (c, _) in g.components() {
            parts &= is_well_dominated(&c)?.verdict;
        }
        let ok = whole.verdict == parts;
        let inst = Instance::new(describe(g), &[g], g.order(), "well-dominated iff components are", ok, true)?;
        Ok(vec![if ok {
            inst
        } else {
            let mut w = Witness::domination(&whole);
            w.note = Some(format!("components well-dominated = {parts}"));
            inst.with_witness(w)
        }])
    })?;
    Ok(finish("obs-components", &[("max_order", max_order)], start, instances))
}

/// For maximal independent `I_G`, `I_H`: `G□H - N[I_G × I_H]` equals
/// `(G - I_G) □ (H - I_H)` including vertex labels.
pub fn verify_product_reduction(max_factor_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_factor_order, 5)?;
    let start = Instant::now();
    let gs = corpus(1, max_factor_order)?;
    let instances = cfg.map(&ordered_pairs(gs.len()), |&(i, j)| {
        let (g, h) = (&gs[i], &gs[j]);
        let (p, map) = cartesian_product(g, h)?;
        let ig: Vec<_> = enumerate_maximal_independent_sets(g)?.collect();
        let ih: Vec<_> = enumerate_maximal_independent_sets(h)?.collect();
        let mut failure = None;
        'outer: for &a in &ig {
            for &b in &ih {
                if let Some(why) = reduction_mismatch(g, h, &p, &map, a, b)? {
                    failure = Some(Witness {
                        kind: WitnessKind::Mismatch,
                        sets: vec![a, b],
                        size: None,
                        note: Some(why),
                    });
                    break 'outer;
                }
            }
        }
        let inst = Instance::new(
            pair_label(g, h),
            &[g, h],
            p.order(),
            "residual product identity",
            failure.is_none(),
            true,
        )?;
        Ok(vec![match failure {
            Some(w) => inst.with_witness(w),
            None => inst,
        }])
    })?;
    Ok(finish(
        "obs-product-reduction",
        &[("max_factor_order", max_factor_order)],
        start,
        instances,
    ))
}

/// `None` when both sides agree label for label, else a description.
pub fn reduction_mismatch(
    g: &Graph,
    h: &Graph,
    p: &Graph,
    map: &crate::product::ProductMap,
    ig: VertexSet,
    ih: VertexSet,
) -> Result<Option<String>> {
    let cross = map.lift_set(ig, ih)?;
    if !p.is_independent(cross)? {
        return Ok(Some("I_G × I_H is not independent".into()));
    }
    let (left, lmap) = p.remove_closed_neighborhood(cross)?;
    let (gr, gmap) = g.remove_vertices(ig)?;
    let (hr, hmap) = h.remove_vertices(ih)?;
    let (right, rmap) = cartesian_product(&gr, &hr)?;
    if left != right {
        return Ok(Some("residual adjacency differs".into()));
    }
    for v in 0..left.order() {
        let (gv, hv) = map.decode(lmap.old_id(v));
        let (gr_v, hr_v) = rmap.decode(v);
        if gmap.old_id(gr_v) != gv || hmap.old_id(hr_v) != hv {
            return Ok(Some(format!("vertex {v} carries different coordinates")));
        }
    }
    Ok(None)
}

/// If `G □ H` is well-covered then `G` or `H` is.
pub fn verify_thm_wc_factor(max_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_order, 5)?;
    let start = Instant::now();
    let mut gs = Vec::new();
    for n in 1..=max_order {
        gs.extend(all_graphs_up_to_iso(n)?);
    }
    let wc: Vec<bool> = gs
        .iter()
        .map(|g| Ok(is_well_covered(g)?.verdict))
        .collect::<Result<_>>()?;
    let instances = cfg.map(&unordered_pairs(gs.len()), |&(i, j)| {
        let (g, h) = (&gs[i], &gs[j]);
        let (p, _) = cartesian_product(g, h)?;
        let r = is_well_covered(&p)?;
        let ok = !r.verdict || wc[i] || wc[j];
        Ok(vec![Instance::new(
            pair_label(g, h),
            &[g, h],
            p.order(),
            "well-covered product has a well-covered factor",
            ok,
            true,
        )?
        .with_witness(Witness::covering(&r))])
    })?;
    Ok(finish("thm-wc-factor", &[("max_order", max_order)], start, instances))
}

/// Connected factors of order at least 3 with girth at least 4 never give a
/// well-covered product.
pub fn verify_lemma_girth4_products(max_factor_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_factor_order, 5)?;
    let start = Instant::now();
    let gs: Vec<Graph> = corpus(3, max_factor_order)?
        .into_iter()
        .filter(|g| g.girth_at_least_4())
        .collect();
    let instances = cfg.map(&unordered_pairs(gs.len()), |&(i, j)| {
        let (g, h) = (&gs[i], &gs[j]);
        let (p, _) = cartesian_product(g, h)?;
        let r = is_well_covered(&p)?;
        Ok(vec![Instance::new(pair_label(g, h), &[g, h], p.order(), "well-covered", r.verdict, false)?
            .with_witness(Witness::covering(&r))])
    })?;
    Ok(finish(
        "lemma-girth4",
        &[("max_factor_order", max_factor_order)],
        start,
        instances,
    ))
}

/// Lift of an open irredundant γ-set is minimal dominating in every product;
/// on well-dominated products `γ(X□Y) = γ(X)n(Y) = γ(Y)n(X)`.
pub fn verify_prop_domfactors(max_factor_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_factor_order, 5)?;
    let start = Instant::now();
    let gs = corpus(2, max_factor_order)?;
    let gammas: Vec<(usize, VertexSet)> = gs
        .iter()
        .map(|g| Ok((domination_number(g)?, find_open_irredundant_gamma_set(g)?)))
        .collect::<Result<_>>()?;
    let instances = cfg.map(&ordered_pairs(gs.len()), |&(i, j)| {
        let (x, y) = (&gs[i], &gs[j]);
        let (p, map) = cartesian_product(x, y)?;
        let lifted = map.lift_g(gammas[i].1)?;
        let minimal = is_minimal_dominating(&p, lifted)?;
        let label = pair_label(x, y);
        let mut lift = Instance::new(label.clone(), &[x, y], p.order(), "gamma-set lift minimal dominating", minimal, true)?;
        if !minimal {
            lift = lift.with_witness(Witness {
                kind: WitnessKind::NotMinimalDominating,
                sets: vec![lifted],
                size: None,
                note: None,
            });
        }
        let mut out = vec![lift];
        let r = is_well_dominated(&p)?;
        if r.verdict {
            let gamma = domination_number(&p)?;
            let (gx, gy) = (gammas[i].0, gammas[j].0);
            let ok = r.common_size == Some(gamma) && gamma == gx * y.order() && gamma == gy * x.order();
            let mut inst = Instance::new(label, &[x, y], p.order(), "gamma identity", ok, true)?;
            inst = inst.with_witness(Witness {
                kind: WitnessKind::WellDominated,
                sets: Vec::new(),
                size: Some(gamma),
                note: Some(format!("gamma(X)={gx}, gamma(Y)={gy}")),
            });
            out.push(inst);
        }
        Ok(out)
    })?;
    Ok(finish(
        "prop-domfactors",
        &[("max_factor_order", max_factor_order)],
        start,
        instances,
    ))
}

/// `P3 □ X` is well-dominated only for `X ≅ K3`; for each vertex of degree
/// at least 3 the explicit set S dominates with fewer than `n(X)` vertices.
pub fn verify_lemma_path3(max_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_order, 6)?;
    let start = Instant::now();
    let xs = corpus(3, max_order)?;
    let p3 = path(3)?;
    let instances = cfg.map(&xs, |x| {
        let mut out = vec![wd_instance(&p3, x, is_k(x, 3))?];
        let (p, map) = cartesian_product(&p3, x)?;
        let column = map.lift_g(VertexSet::singleton(1))?;
        for v in 0..x.order() {
            if x.degree(v)? < 3 {
                continue;
            }
            let s = gadget_lemma7_set(x, v)?;
            let label = format!("{} x={v}", pair_label(&p3, x));
            let ok = is_dominating(&p, s)? && s.len() < x.order();
            let mut inst = Instance::new(label.clone(), &[&p3, x], p.order(), "gadget S dominates below n(X)", ok, true)?;
            inst = inst.with_witness(Witness {
                kind: WitnessKind::Gadget,
                sets: vec![s],
                size: Some(s.len()),
                note: None,
            });
            out.push(inst);
            let m = reduce_to_minimal(&p, s)?;
            let ok = is_minimal_dominating(&p, m)? && is_minimal_dominating(&p, column)? && m.len() < column.len();
            out.push(
                Instance::new(label, &[&p3, x], p.order(), "minimal subset of S refutes", ok, true)?.with_witness(
                    Witness {
                        kind: WitnessKind::UnequalMinimalDominatingSets,
                        sets: vec![m, column],
                        size: None,
                        note: None,
                    },
                ),
            );
        }
        Ok(out)
    })?;
    Ok(finish("lemma-path3", &[("max_order", max_order)], start, instances))
}

fn bipartite_shapes(max_r: usize, max_s: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 3..=max_s {
        out.push((1, s));
    }
    for r in 2..=max_r.min(max_s) {
        for s in r..=max_s {
            out.push((r, s));
        }
    }
    out
}

/// `K_{r,s} □ X` is never well-dominated for `2 <= r <= s`, or `r = 1` and
/// `s >= 3`; the explicit sets are minimal dominating for every choice of
/// `D_X`.
pub fn verify_lemma_bipartite(
    max_r: usize,
    max_s: usize,
    max_order: usize,
    cfg: &SweepConfig,
) -> Result<SweepReport> {
    check_bound("max_order", max_order, 6)?;
    let start = Instant::now();
    let xs = corpus(3, max_order)?;
    let shapes = bipartite_shapes(max_r, max_s);
    for &(r, s) in &shapes {
        check_bound("product order", (r + s) * max_order, crate::set::CAPACITY)?;
    }
    let jobs: Vec<(usize, usize)> = (0..shapes.len())
        .flat_map(|a| (0..xs.len()).map(move |b| (a, b)))
        .collect();
    let instances = cfg.map(&jobs, |&(a, b)| {
        let (r, s) = shapes[a];
        let x = &xs[b];
        let k = complete_bipartite(r, s)?;
        let mut out = vec![wd_instance(&k, x, false)?];
        let (p, _) = cartesian_product(&k, x)?;
        let mut failure = None;
        if r >= 2 {
            for d in enumerate_minimal_dominating_sets(x)? {
                let (d1, d3) = gadget_bipartite_sets(r, s, x, d)?;
                for set in [d1, d3] {
                    if failure.is_none() && !is_minimal_dominating(&p, set)? {
                        failure = Some(set);
                    }
                }
            }
        } else {
            let alpha = independence_number(x)?;
            for d in enumerate_maximal_independent_sets(x)?.filter(|d| d.len() == alpha) {
                let (c, o) = gadget_star_sets(s, x, d)?;
                for set in [c, o] {
                    if failure.is_none() && !is_minimal_dominating(&p, set)? {
                        failure = Some(set);
                    }
                }
            }
        }
        let inst = Instance::new(
            pair_label(&k, x),
            &[&k, x],
            p.order(),
            "gadget sets minimal dominating",
            failure.is_none(),
            true,
        )?;
        out.push(match failure {
            Some(set) => inst.with_witness(Witness {
                kind: WitnessKind::NotMinimalDominating,
                sets: vec![set],
                size: None,
                note: None,
            }),
            None => inst,
        });
        Ok(out)
    })?;
    Ok(finish(
        "lemma-bipartite",
        &[("max_r", max_r), ("max_s", max_s), ("max_order", max_order)],
        start,
        instances,
    ))
}

/// Clique-with-leaves factors never give well-dominated products with a
/// connected `X` of order at least 3.
pub fn verify_lemma_spwd(max_leaves: usize, max_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_order, 6)?;
    check_bound("product order", (4 + max_leaves) * max_order, crate::set::CAPACITY)?;
    let start = Instant::now();
    let xs = corpus(3, max_order)?;
    let mut factors = Vec::new();
    for c in LeafCounts::up_to(max_leaves) {
        factors.push((family_f1(c)?, c, 3));
    }
    for c in LeafCounts::up_to(max_leaves) {
        factors.push((family_f2(c)?, c, 4));
    }
    let jobs: Vec<(usize, usize)> = (0..factors.len())
        .flat_map(|a| (0..xs.len()).map(move |b| (a, b)))
        .collect();
    let instances = cfg.map(&jobs, |&(a, b)| {
        let (f, c, clique) = &factors[a];
        let x = &xs[b];
        let mut out = vec![wd_instance(f, x, false)?];
        if c.all_positive() {
            let (p, _) = cartesian_product(f, x)?;
            let gamma = domination_number(x)?;
            let mut failure = None;
            for d in enumerate_minimal_dominating_sets(x)?.filter(|d| d.len() == gamma) {
                let sets = if *clique == 3 {
                    gadget_f1_sets(f, x, d)?
                } else {
                    gadget_f2_sets(f, x, d)?
                };
                for set in sets {
                    if failure.is_none() && !is_minimal_dominating(&p, set)? {
                        failure = Some(set);
                    }
                }
            }
            let inst = Instance::new(
                pair_label(f, x),
                &[f, x],
                p.order(),
                "gadget sets minimal dominating",
                failure.is_none(),
                true,
            )?;
            out.push(match failure {
                Some(set) => inst.with_witness(Witness {
                    kind: WitnessKind::NotMinimalDominating,
                    sets: vec![set],
                    size: None,
                    note: None,
                }),
                None => inst,
            });
        }
        Ok(out)
    })?;
    Ok(finish(
        "lemma-spwd",
        &[("max_leaves", max_leaves), ("max_order", max_order)],
        start,
        instances,
    ))
}

/// Nontrivial connected factors of girth at least 4: well-dominated product
/// only for `K2 □ K2`.
pub fn verify_thm_girth4_products(max_factor_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_factor_order, 6)?;
    let start = Instant::now();
    let gs: Vec<Graph> = corpus(2, max_factor_order)?
        .into_iter()
        .filter(|g| g.girth_at_least_4())
        .collect();
    let instances = cfg.map(&unordered_pairs(gs.len()), |&(i, j)| {
        let (g, h) = (&gs[i], &gs[j]);
        Ok(vec![wd_instance(g, h, is_k(g, 2) && is_k(h, 2))?])
    })?;
    Ok(finish(
        "thm-girth4-products",
        &[("max_factor_order", max_factor_order)],
        start,
        instances,
    ))
}

/// If `G □ H` is well-dominated then `G` or `H` is.
pub fn verify_thm_factor_wd(max_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_order, 5)?;
    let start = Instant::now();
    let gs = corpus(1, max_order)?;
    let wd: Vec<bool> = gs
        .iter()
        .map(|g| Ok(is_well_dominated(g)?.verdict))
        .collect::<Result<_>>()?;
    let instances = cfg.map(&unordered_pairs(gs.len()), |&(i, j)| {
        let (g, h) = (&gs[i], &gs[j]);
        let (p, _) = cartesian_product(g, h)?;
        let r = is_well_dominated(&p)?;
        Ok(vec![Instance::new(
            pair_label(g, h),
            &[g, h],
            p.order(),
            "well-dominated product has a well-dominated factor",
            !r.verdict || wd[i] || wd[j],
            true,
        )?
        .with_witness(Witness::domination(&r))])
    })?;
    Ok(finish("thm-factor-wd", &[("max_order", max_order)], start, instances))
}

/// `K_m □ H` is well-dominated iff `m != 3` and `H = K_m`, or `m = 3` and
/// `H ∈ {P3, K3}`.
pub fn verify_thm_wdcart(max_m: usize, max_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_order, 6)?;
    check_bound("product order", max_m * max_order, crate::set::CAPACITY)?;
    let start = Instant::now();
    let hs = corpus(2, max_order)?;
    let jobs: Vec<(usize, usize)> = (2..=max_m).flat_map(|m| (0..hs.len()).map(move |b| (m, b))).collect();
    let instances = cfg.map(&jobs, |&(m, b)| {
        let h = &hs[b];
        let expected = if m == 3 { is_p3(h) || is_k(h, 3) } else { is_k(h, m) };
        Ok(vec![wd_instance(&complete(m)?, h, expected)?])
    })?;
    Ok(finish(
        "thm-wdcart",
        &[("max_m", max_m), ("max_order", max_order)],
        start,
        instances,
    ))
}

/// Ordered pairs of nontrivial connected graphs: well-dominated exactly for
/// `P3 □ K3`, `K3 □ P3` and `K_n □ K_n`; every well-dominated product has a
/// complete factor.
pub fn verify_main_theorem(max_factor_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_factor_order, 6)?;
    let start = Instant::now();
    let gs = corpus(2, max_factor_order)?;
    let instances = cfg.map(&ordered_pairs(gs.len()), |&(i, j)| {
        let (g, h) = (&gs[i], &gs[j]);
        let inst = wd_instance(g, h, characterised(g, h))?;
        let mut out = Vec::new();
        if inst.verdict {
            let complete_factor = g.is_complete() || h.is_complete();
            out.push(Instance::new(
                inst.label.clone(),
                &[g, h],
                inst.product_order,
                "some factor complete",
                complete_factor,
                true,
            )?);
        }
        out.insert(0, inst);
        Ok(out)
    })?;
    Ok(finish(
        "thm-main",
        &[("max_factor_order", max_factor_order)],
        start,
        instances,
    ))
}

/// Unordered pairs, plus `K_n □ K_n` spot checks for `max_factor_order < n <= 6`.
pub fn verify_corollary(max_factor_order: usize, cfg: &SweepConfig) -> Result<SweepReport> {
    check_bound("max_order", max_factor_order, 6)?;
    let start = Instant::now();
    let mut pairs: Vec<(Graph, Graph)> = Vec::new();
    let gs = corpus(2, max_factor_order)?;
    for (i, j) in unordered_pairs(gs.len()) {
        pairs.push((gs[i].clone(), gs[j].clone()));
    }
    for n in max_factor_order.max(1) + 1..=6 {
        pairs.push((complete(n)?, complete(n)?));
    }
    let instances = cfg.map(&pairs, |(g, h)| Ok(vec![wd_instance(g, h, characterised(g, h))?]))?;
    Ok(finish(
        "corollary",
        &[("max_factor_order", max_factor_order)],
        start,
        instances,
    ))
}
