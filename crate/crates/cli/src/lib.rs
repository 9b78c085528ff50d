//! Report assembly for the `twa` command line tool.
//!
//! A run builds the group, its scheme and Terwilliger data, decides almost
//! commutativity by all three criteria, compares the closed dimension
//! against the family formula, and (for the almost-commutative families)
//! checks the wreath factorization. The exit-code contract is: zero exactly
//! when every internal consistency assertion passed.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use twa_core::group::{
    build_parsed, camina_class_structure_check, center_elements, classify_family,
    conjugacy_classes, derived_subgroup, dimension_formula, is_camina, parse_spec,
    subgroup_closure, subgroup_series, FamilyLabel, FiniteGroup, GroupSpec,
};
use twa_core::scheme::{check_wreath_factorization, group_scheme, AssociationScheme, WreathFactor};
use twa_core::terwilliger::{
    ac_by_class_products, ac_by_intersection_numbers, ac_by_schur_condition, terwilliger_dimension,
};
use twa_core::wedderburn::{decomposition_report, DecompositionReport};

pub const DEFAULT_MAX_ORDER: usize = 256;

/// Group order cap from `TWA_MAX_ORDER` (default 256).
pub fn max_order() -> usize {
    std::env::var("TWA_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

/// Order the spec would produce, read off without building the table.
fn predicted_order(spec: &GroupSpec) -> Result<usize> {
    Ok(match spec {
        GroupSpec::Cyclic(n) => *n,
        GroupSpec::Prod(fs) => fs
            .iter()
            .map(predicted_order)
            .try_fold(1usize, |a, b| b.map(|b| a * b))?,
        GroupSpec::Dihedral(n) => 2 * n,
        GroupSpec::Q8 => 8,
        GroupSpec::Heisenberg(p) => (*p as usize).pow(3),
        GroupSpec::Frobenius(p, r) => {
            let q = (*p as usize).pow(*r);
            q * (q - 1)
        }
        GroupSpec::Z3sqQ8 => 72,
        GroupSpec::Cayley(path) | GroupSpec::Semidirect(path) => {
            // Peek at the header; semidirect files start with two spec lines.
            let text = std::fs::read_to_string(path).with_context(|| path.clone())?;
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let first = lines.next().unwrap_or_default().trim().to_string();
            if let GroupSpec::Cayley(_) = spec {
                first.parse().with_context(|| "cayley header")?
            } else {
                let n = predicted_order(&parse_spec(&first)?)?;
                let h = predicted_order(&parse_spec(lines.next().unwrap_or_default().trim())?)?;
                n * h
            }
        }
    })
}

/// Parses and builds a group, enforcing the order cap.
pub fn build_checked(spec: &str) -> Result<FiniteGroup> {
    let parsed = parse_spec(spec)?;
    let order = predicted_order(&parsed)?;
    let cap = max_order();
    if order > cap {
        bail!("group of order {order} exceeds the order cap {cap} (set TWA_MAX_ORDER to raise)");
    }
    Ok(build_parsed(&parsed)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub group_spec: String,
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub center_order: usize,
    pub derived_order: usize,
    pub nilpotency_class: Option<usize>,
    pub camina: bool,
    pub camina_class_structure: Option<bool>,
    pub family: FamilyLabel,
}

pub fn group_info(spec: &str) -> Result<GroupInfo> {
    let g = build_checked(spec)?;
    let classes = conjugacy_classes(&g);
    let series = subgroup_series(&g);
    let camina = is_camina(&g);
    let camina_class_structure = camina_class_structure_check(&g).ok();
    Ok(GroupInfo {
        group_spec: spec.to_string(),
        order: g.order(),
        class_sizes: classes.sizes(),
        center_order: series.center.len(),
        derived_order: series.derived.len(),
        nilpotency_class: series.nilpotency_class,
        camina,
        camina_class_structure,
        family: classify_family(&g),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcVerdicts {
    pub intersection_numbers: bool,
    pub schur_condition: bool,
    pub class_products: bool,
}

/// The full machine-readable run report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub group_spec: String,
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub family: FamilyLabel,
    pub ac: AcVerdicts,
    #[serde(rename = "dim_T")]
    pub dim_t: usize,
    #[serde(rename = "dim_T0")]
    pub dim_t0: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_dim: Option<u64>,
    pub center_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wreath_check: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionReport>,
}

/// Assembles the report; `with_decomp` additionally builds and verifies the
/// Wedderburn generators. Returns the report plus the list of failed
/// consistency assertions (empty on a fully consistent run).
pub fn run_twa(spec: &str, with_decomp: bool) -> Result<(RunReport, Vec<String>)> {
    let g = build_checked(spec)?;
    let classes = conjugacy_classes(&g);
    let scheme = group_scheme(&g, &classes);
    let family = classify_family(&g);
    let tensor = scheme
        .intersection_numbers()
        .map_err(|e| anyhow!("scheme violates the axioms: {e}"))?;
    let ac = AcVerdicts {
        intersection_numbers: ac_by_intersection_numbers(&tensor),
        schur_condition: ac_by_schur_condition(&g, classes.classes())
            .map_err(|e| anyhow!("conjugacy partition rejected: {e}"))?,
        class_products: ac_by_class_products(&g, &classes),
    };
    let report = terwilliger_dimension(&scheme, g.identity())?;
    let predicted_dim = if family == FamilyLabel::NotAC {
        None
    } else {
        Some(u64::try_from(dimension_formula(&family, g.order())?)?)
    };
    let wreath_check = wreath_check_for_family(&g, &scheme, &family)?;
    let decomposition = if with_decomp && family != FamilyLabel::NotAC {
        Some(decomposition_report(&g)?)
    } else {
        None
    };
    let run = RunReport {
        group_spec: spec.to_string(),
        order: g.order(),
        class_sizes: classes.sizes(),
        family,
        ac,
        dim_t: report.dim_t,
        dim_t0: report.dim_t0,
        predicted_dim,
        center_dim: report.center_dim,
        wreath_check,
        decomposition,
    };
    let failures = consistency_failures(&run, scheme.classes());
    Ok((run, failures))
}

fn consistency_failures(run: &RunReport, classes: usize) -> Vec<String> {
    let mut bad = Vec::new();
    if !(run.ac.intersection_numbers == run.ac.schur_condition
        && run.ac.schur_condition == run.ac.class_products)
    {
        bad.push("ac criteria disagree".to_string());
    }
    let is_ac = run.ac.intersection_numbers;
    if is_ac != (run.family != FamilyLabel::NotAC) {
        bad.push(format!(
            "family label {} contradicts the ac verdict {is_ac}",
            run.family
        ));
    }
    match run.predicted_dim {
        Some(p) => {
            if p as usize != run.dim_t {
                bad.push(format!(
                    "dim T = {} differs from the formula value {p}",
                    run.dim_t
                ));
            }
        }
        None => {
            if run.family != FamilyLabel::NotAC {
                bad.push("predicted dimension missing for an AC family".into());
            }
        }
    }
    if run.dim_t0 > run.dim_t {
        bad.push(format!(
            "dim T0 = {} exceeds dim T = {}",
            run.dim_t0, run.dim_t
        ));
    }
    if is_ac && run.dim_t0 != run.dim_t {
        bad.push("AC but not triply regular".into());
    }
    if is_ac {
        let primary = classes * classes;
        if run.center_dim != 1 + run.dim_t - primary {
            bad.push(format!(
                "center dimension {} does not match 1 + dim T - (d+1)^2",
                run.center_dim
            ));
        }
    }
    if run.wreath_check == Some(false) {
        bad.push("wreath factorization failed".into());
    }
    if let Some(d) = &run.decomposition {
        if !d.accounting_ok {
            bad.push("decomposition accounting failed".into());
        }
        if !d.pairwise_orthogonal {
            bad.push("generators are not pairwise orthogonal".into());
        }
        if !d.generators.iter().all(|g| g.verified) {
            bad.push("an ideal generator failed verification".into());
        }
    }
    bad
}

/// The canonical wreath factorization for each AC family, checked along the
/// matching normal chain; `None` for abelian groups (nothing to factor) and
/// for NotAC.
fn wreath_check_for_family(
    g: &FiniteGroup,
    scheme: &AssociationScheme,
    family: &FamilyLabel,
) -> Result<Option<bool>> {
    let verdict = match family {
        FamilyLabel::Abelian | FamilyLabel::NotAC => return Ok(None),
        FamilyLabel::FrobeniusPR { .. } => {
            let (chain, factors) = chain_for(g, "kp-cyclic")?;
            check_wreath_factorization(g, scheme, &chain, &factors)?.0
        }
        FamilyLabel::CaminaP2 { .. } => {
            let (chain, factors) = chain_for(g, "center")?;
            check_wreath_factorization(g, scheme, &chain, &factors)?.0
        }
        FamilyLabel::CaminaP3 { .. } => {
            let (chain, factors) = chain_for(g, "both")?;
            check_wreath_factorization(g, scheme, &chain, &factors)?.0
        }
        FamilyLabel::Z3sqQ8 => {
            let (chain, factors) = chain_for(g, "k9-z2-z2sq")?;
            check_wreath_factorization(g, scheme, &chain, &factors)?.0
        }
    };
    Ok(Some(verdict))
}

/// Resolves a named subgroup chain to the chain and wreath factors:
///   center      G(Z(G)) wr G(G/Z(G))
///   derived     K wr G(G/G')
///   kp-cyclic   K wr G(Z_m) with an explicit cyclic comparison group
///   both        G(Z(G)) wr G(G'/Z(G)) wr G(G/G')
///   k9-z2-z2sq  K_9 wr G(Z_2) wr G(Z_2^2) along the order-9/18 chain
pub fn chain_for(g: &FiniteGroup, name: &str) -> Result<(Vec<Vec<usize>>, Vec<WreathFactor>)> {
    match name {
        "center" => {
            let z = center_elements(g);
            Ok((
                vec![z],
                vec![WreathFactor::Subquotient, WreathFactor::Subquotient],
            ))
        }
        "derived" => {
            let d = derived_subgroup(g);
            Ok((
                vec![d],
                vec![WreathFactor::Trivial, WreathFactor::Subquotient],
            ))
        }
        "kp-cyclic" => {
            let d = derived_subgroup(g);
            let m = g.order() / d.len();
            let zm = twa_core::group::build_group(&format!("cyclic:{m}"))?;
            Ok((
                vec![d],
                vec![WreathFactor::Trivial, WreathFactor::Abstract(zm)],
            ))
        }
        "both" => {
            let series = subgroup_series(g);
            Ok((
                vec![series.center, series.derived],
                vec![
                    WreathFactor::Subquotient,
                    WreathFactor::Subquotient,
                    WreathFactor::Subquotient,
                ],
            ))
        }
        "k9-z2-z2sq" => {
            // N1 = the elements of odd order; N2 = preimage of Z(G/N1).
            let odd: Vec<usize> = (0..g.order())
                .filter(|&x| g.element_order(x) % 2 == 1)
                .collect();
            let n1 = subgroup_closure(g, &odd);
            if n1.len() != odd.len() || n1.len() != 9 {
                bail!("group has no normal odd-order subgroup of order 9");
            }
            let n2 = twa_core::group::centralizing_preimage(g, &n1)?;
            let z2 = twa_core::group::build_group("cyclic:2")?;
            let z2sq = twa_core::group::build_group("prod:cyclic:2,cyclic:2")?;
            Ok((
                vec![n1, n2],
                vec![
                    WreathFactor::Trivial,
                    WreathFactor::Abstract(z2),
                    WreathFactor::Abstract(z2sq),
                ],
            ))
        }
        other => {
            bail!("unknown chain `{other}`; expected center|derived|kp-cyclic|both|k9-z2-z2sq")
        }
    }
}

/// Result of `scheme eq`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqReport {
    pub group_spec: String,
    pub chain: String,
    pub factor_sizes: Vec<usize>,
    pub equal: bool,
}

pub fn scheme_eq(spec: &str, chain_name: &str) -> Result<EqReport> {
    let g = build_checked(spec)?;
    let classes = conjugacy_classes(&g);
    let scheme = group_scheme(&g, &classes);
    let (chain, factors) = chain_for(&g, chain_name)?;
    let tower = twa_core::scheme::subquotient_tower(&g, &chain)?;
    let (equal, _) = check_wreath_factorization(&g, &scheme, &chain, &factors)?;
    Ok(EqReport {
        group_spec: spec.to_string(),
        chain: chain_name.to_string(),
        factor_sizes: tower.iter().map(|t| t.order()).collect(),
        equal,
    })
}

/// Renders the block of each ideal generator row-major, rationals as `a/b`
/// and cyclotomic entries as coefficient tuples `c0 + c1*z + ...`.
pub fn render_generator_blocks(spec: &str) -> Result<String> {
    use twa_core::wedderburn::{cam2_idempotents, frobenius_idempotents};
    let g = build_checked(spec)?;
    let gens = match classify_family(&g) {
        FamilyLabel::FrobeniusPR { .. } => frobenius_idempotents(&g)?,
        FamilyLabel::CaminaP2 { .. } => cam2_idempotents(&g)?,
        FamilyLabel::CaminaP3 { .. } => twa_core::wedderburn::cam3_generators(&g)?,
        other => bail!("no generator blocks for family {other}"),
    };
    let mut out = String::new();
    for gen in &gens {
        out.push_str(&format!("{} on elements {:?}\n", gen.label, gen.support));
        for r in 0..gen.block.rows() {
            let row: Vec<String> = (0..gen.block.cols())
                .map(|c| gen.block.get(r, c).to_string())
                .collect();
            out.push_str("  ");
            out.push_str(&row.join("  "));
            out.push('\n');
        }
    }
    Ok(out)
}

/// Human-readable rendering of a run report.
pub fn render_report(run: &RunReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("group     {}", run.group_spec));
    line(format!("order     {}", run.order));
    line(format!("classes   {:?}", run.class_sizes));
    line(format!("family    {}", run.family));
    line(format!(
        "ac        intersection_numbers={} schur_condition={} class_products={}",
        run.ac.intersection_numbers, run.ac.schur_condition, run.ac.class_products
    ));
    line(format!("dim T     {}", run.dim_t));
    line(format!("dim T0    {}", run.dim_t0));
    if let Some(p) = run.predicted_dim {
        line(format!("predicted {p}"));
    }
    line(format!("center    {}", run.center_dim));
    if let Some(w) = run.wreath_check {
        line(format!("wreath    {w}"));
    }
    if let Some(d) = &run.decomposition {
        line(format!(
            "decomp    primary {} + {} one-dim ideals, accounting_ok={}, orthogonal={}",
            d.primary_dim,
            d.generators.len(),
            d.accounting_ok,
            d.pairwise_orthogonal
        ));
        for gr in &d.generators {
            line(format!(
                "          {} verified={} idempotent={}",
                gr.label, gr.verified, gr.idempotent
            ));
        }
        if let Some(n) = &d.note {
            line(format!("          note: {n}"));
        }
    }
    out
}

pub fn render_group_info(info: &GroupInfo) -> String {
    let mut out = String::new();
    out.push_str(&format!("group     {}\n", info.group_spec));
    out.push_str(&format!("order     {}\n", info.order));
    out.push_str(&format!("classes   {:?}\n", info.class_sizes));
    out.push_str(&format!("center    {}\n", info.center_order));
    out.push_str(&format!("derived   {}\n", info.derived_order));
    match info.nilpotency_class {
        Some(c) => out.push_str(&format!("nilpotency class {c}\n")),
        None => out.push_str("not nilpotent\n"),
    }
    out.push_str(&format!("camina    {}\n", info.camina));
    if let Some(ok) = info.camina_class_structure {
        out.push_str(&format!("camina class structure {ok}\n"));
    }
    out.push_str(&format!("family    {}\n", info.family));
    out
}
