//! Named, machine-checkable claims about the construction, shared by the
//! `verify` command and the acceptance tests.
//!
//! Each check either runs and reports pass/fail with a detail string, or is
//! skipped (reported as passing with a "skipped:" detail) when its
//! preconditions do not apply at the given q. A check that cannot run
//! within the configured budgets surfaces as a [`SuiteError::Budget`] so
//! callers can distinguish "claim failed" from "out of budget".

use std::fmt;

use crate::bounds::{
    figure_dataset, gv_b2_curve, line_improved, line_tbf, special_point, window_margin,
};
use crate::gf::Fe;
use crate::lrc::{
    dimension_rank, encode, exhaustive_min_distance, generator_matrix, CodeSpec, LrcError,
};
use crate::rational::Rational;
use crate::recovery::{recover_erasure, recovery_sets, set_of_position};
use crate::rng::SplitMix64;
use crate::tower::{genus_gs, Tower, TowerError, TraceClassPartition};
use crate::witness::{witness41, witness42, WitnessReport};

#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn ok(id: &str, detail: impl Into<String>) -> Check {
        Check { id: id.into(), pass: true, detail: detail.into() }
    }

    fn fail(id: &str, detail: impl Into<String>) -> Check {
        Check { id: id.into(), pass: false, detail: detail.into() }
    }

    fn when(id: &str, pass: bool, detail: impl Into<String>) -> Check {
        Check { id: id.into(), pass, detail: detail.into() }
    }

    fn skip(id: &str, why: impl fmt::Display) -> Check {
        Check { id: id.into(), pass: true, detail: format!("skipped: {why}") }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteError {
    Budget { required: u128, budget: u128 },
    UnknownSuite(String),
    Internal(String),
}

impl fmt::Display for SuiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteError::Budget { required, budget } => {
                write!(f, "budget exceeded: needs {required}, budget is {budget}")
            }
            SuiteError::UnknownSuite(s) => write!(
                f,
                "unknown suite '{s}': expected partitions | lemma | corollary | props | all"
            ),
            SuiteError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for SuiteError {}

impl From<TowerError> for SuiteError {
    fn from(e: TowerError) -> Self {
        match e {
            TowerError::BudgetExceeded { required, budget } => {
                SuiteError::Budget { required, budget: budget as u128 }
            }
            other => SuiteError::Internal(other.to_string()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub seed: u64,
    pub place_budget: usize,
    pub message_budget: u64,
    pub threads: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 42,
            place_budget: crate::tower::DEFAULT_PLACE_BUDGET,
            message_budget: crate::lrc::DEFAULT_MESSAGE_BUDGET,
            threads: 1,
        }
    }
}

/// Partition structure of the splitting locus (class sizes, trace-fiber
/// mixing, coloring degrees).
pub fn suite_partitions(tower: &Tower) -> Result<Vec<Check>, SuiteError> {
    let f = tower.field();
    let q = tower.q();
    let part = TraceClassPartition::new(tower);
    let mut out = Vec::new();

    let sizes_ok = part.betas().all(|b| part.s_class(b).len() as u32 == q);
    out.push(Check::when(
        "classes.size",
        sizes_ok,
        format!("{} classes of size q = {q}", q - 1),
    ));

    let total: usize = part.betas().map(|b| part.s_class(b).len()).sum();
    let mut all: Vec<Fe> = part.betas().flat_map(|b| part.s_class(b).to_vec()).collect();
    all.sort_unstable();
    all.dedup();
    out.push(Check::when(
        "classes.partition",
        total as u32 == q * q - q && all.len() == total,
        format!("disjoint union has {total} = q²−q values"),
    ));

    let b_ok = part.betas().all(|b| part.b_class(b).len() as u32 == q);
    out.push(Check::when("bsets.size", b_ok, format!("{} trace fibers of size q", q - 1)));

    let mut pair_ok = true;
    let mut singleton_ok = true;
    for bs in part.betas() {
        for bb in part.betas() {
            let inter: Vec<Fe> = part
                .s_class(bs)
                .iter()
                .copied()
                .filter(|a| part.b_class(bb).contains(a))
                .collect();
            if inter.len() > 2 {
                pair_ok = false;
            }
            let has_base = inter.iter().any(|&a| f.in_base(a));
            if (inter.len() == 1) != has_base {
                singleton_ok = false;
            }
        }
    }
    out.push(Check::when(
        "mix.pair-bound",
        pair_ok,
        "every class/fiber intersection has at most 2 values",
    ));
    out.push(Check::when(
        "mix.singleton-base",
        singleton_ok,
        "intersections of size 1 are exactly the base-field values",
    ));

    let mut fiber_ok = true;
    for beta in f.base_elements() {
        let fiber = f.solve_trace(beta).expect("base beta");
        let base_count = fiber.iter().filter(|&&y| f.in_base(y)).count();
        let paired = fiber
            .iter()
            .filter(|&&y| !f.in_base(y))
            .all(|&y| fiber.contains(&f.frobenius(y)) && f.frobenius(y) != y);
        if base_count != 1 || !paired || fiber.len() as u32 != q {
            fiber_ok = false;
        }
    }
    out.push(Check::when(
        "fibers.structure",
        fiber_ok,
        format!("each trace fiber: one base solution plus {} conjugate pairs", (q - 1) / 2),
    ));

    #[allow(clippy::manual_div_ceil)] // (q+1)/2 as in the statement, exact for odd q
    let want_colors = ((q + 1) / 2) as usize;
    let color_counts_ok = part
        .betas()
        .all(|b| part.child_colors(b).len() == want_colors && part.parent_colors(b).len() == want_colors);
    // Cross-check on actual places at levels 0 and 1.
    let mut place_colors_ok = true;
    for level in 0..=1usize {
        let places = tower.enumerate_split_places(level, crate::tower::DEFAULT_PLACE_BUDGET)?;
        for p in &places {
            let kids = tower.extend_place(p).expect("valid place");
            let mut colors: Vec<Fe> = kids
                .iter()
                .map(|k| tower.color_of(k, level + 1).expect("valid child"))
                .collect();
            colors.sort_unstable();
            colors.dedup();
            if colors.len() != want_colors {
                place_colors_ok = false;
            }
        }
    }
    out.push(Check::when(
        "colors.child-count",
        color_counts_ok && place_colors_ok,
        format!("exactly (q+1)/2 = {want_colors} colors above every place"),
    ));
    out.push(Check::when(
        "colors.parent-count",
        color_counts_ok,
        format!("each color appears above exactly {want_colors} colors"),
    ));
    Ok(out)
}

/// Split-place counts (the rational-place floor) and the genus closed form.
pub fn suite_counts(
    tower: &Tower,
    max_level: usize,
    cfg: &CheckConfig,
) -> Result<Vec<Check>, SuiteError> {
    let q = tower.q();
    let mut out = Vec::new();
    for j in 0..=max_level {
        let places = tower.enumerate_split_places(j, cfg.place_budget)?;
        let want = tower.place_count(j);
        out.push(Check::when(
            &format!("split-count.level{j}"),
            places.len() as u128 == want,
            format!("{} places enumerated; witnesses N(F_{j}) >= {}", places.len(), want + 1),
        ));
    }
    // The genus closed form: zero at the rational base, strictly growing,
    // and a perfect square at every odd level (it is (q^((j+1)/2) − 1)²).
    let mut genus_ok = genus_gs(q, 0) == 0;
    let mut genus_vals = Vec::new();
    for j in 0..=6u32 {
        let g = genus_gs(q, j);
        if j > 0 && g <= genus_gs(q, j - 1) {
            genus_ok = false;
        }
        if j % 2 == 1 {
            let root = (g as f64).sqrt().round() as u128;
            if root * root != g {
                genus_ok = false;
            }
        }
        genus_vals.push(g.to_string());
    }
    out.push(Check::when(
        "genus.closed-form",
        genus_ok,
        format!("g(F_0..F_6) = {}", genus_vals.join(",")),
    ));
    Ok(out)
}

/// Coordinate zero counts per level, and the parent-color bijection for
/// top-coordinate zeros.
pub fn suite_lemma(
    tower: &Tower,
    max_level: usize,
    cfg: &CheckConfig,
) -> Result<Vec<Check>, SuiteError> {
    let f = tower.field();
    let q = tower.q();
    let mut out = Vec::new();
    for j in 0..=max_level {
        let places = tower.enumerate_split_places(j, cfg.place_budget)?;
        let expect = (q as u128).pow(j as u32);
        // One histogram pass per coordinate.
        let mut ok = true;
        for coord in 0..=j {
            let mut counts = vec![0u128; f.order() as usize];
            for p in &places {
                counts[p.coord(coord).index() as usize] += 1;
            }
            for alpha in f.elements() {
                let splitting = f.trace(alpha).index() != 0;
                let want = if splitting { expect } else { 0 };
                if counts[alpha.index() as usize] != want {
                    ok = false;
                }
            }
        }
        out.push(Check::when(
            &format!("coordinate-zeros.level{j}"),
            ok,
            format!("every splitting value hits each coordinate q^{j} = {expect} times, others never"),
        ));
    }

    // Items relating top-coordinate zeros to parent colors, at the highest
    // level enumerated (needs level >= 1).
    if max_level >= 1 {
        let j = max_level.min(2);
        let places = tower.enumerate_split_places(j, cfg.place_budget)?;
        let parents = tower.enumerate_split_places(j - 1, cfg.place_budget)?;
        let mut ok = true;
        for &alpha in tower.splitting_values() {
            let k = f.trace(alpha);
            let zeros: Vec<_> = places.iter().filter(|p| p.coord(j) == alpha).collect();
            for z in &zeros {
                if tower.color_of(z, j - 1).expect("valid") != k {
                    ok = false;
                }
            }
            let parents_colored_k = parents
                .iter()
                .filter(|p| tower.color_of(p, j - 1).expect("valid") == k)
                .count();
            if zeros.len() != parents_colored_k {
                ok = false;
            }
        }
        out.push(Check::when(
            "coordinate-zeros.parent-color",
            ok,
            format!(
                "level-{j} zeros of a top value with trace k sit one-per-parent over the \
                 color-k places"
            ),
        ));
    }
    Ok(out)
}

/// Common zeros of coordinate 0 and coordinate 3 across all value pairs.
pub fn suite_corollary(tower: &Tower, cfg: &CheckConfig) -> Result<Vec<Check>, SuiteError> {
    let f = tower.field();
    let required = tower.place_count(3);
    if required > cfg.place_budget as u128 {
        return Ok(vec![Check::skip(
            "common-zeros.reach",
            format!("needs {required} level-3 places, budget {}", cfg.place_budget),
        )]);
    }
    let places = tower.enumerate_split_places(3, cfg.place_budget)?;
    let order = f.order() as usize;
    let mut reach = vec![false; order * order];
    for p in &places {
        reach[p.coord(0).index() as usize * order + p.coord(3).index() as usize] = true;
    }
    let values = tower.splitting_values();
    let mut missing = 0usize;
    for &a in values {
        for &b in values {
            if !reach[a.index() as usize * order + b.index() as usize] {
                missing += 1;
            }
        }
    }
    Ok(vec![Check::when(
        "common-zeros.reach",
        missing == 0,
        format!(
            "{} value pairs share a place three levels up ({} missing)",
            values.len() * values.len(),
            missing
        ),
    )])
}

fn witness_check(
    id: &str,
    result: Result<WitnessReport, LrcError>,
) -> Result<Vec<Check>, SuiteError> {
    match result {
        Ok(w) => {
            let mut checks = vec![Check::ok(
                id,
                format!(
                    "q={}, l={}: weight {} = designed bound; {} zeros{}",
                    w.spec.q(),
                    w.spec.pole_order(),
                    w.weight,
                    w.zeros,
                    w.note.as_deref().map(|n| format!("; note: {n}")).unwrap_or_default()
                ),
            )];
            checks.push(Check::ok(
                &format!("{id}.exact-distance"),
                format!("exact minimum distance pinned to {}", w.weight),
            ));
            Ok(checks)
        }
        Err(LrcError::Tower(TowerError::BudgetExceeded { required, budget })) => {
            Err(SuiteError::Budget { required, budget: budget as u128 })
        }
        Err(LrcError::BudgetExceeded { required, budget }) => {
            Err(SuiteError::Budget { required, budget: budget as u128 })
        }
        Err(e) => Ok(vec![Check::fail(id, e.to_string())]),
    }
}

/// Dimension, designed distance, exhaustive floor, and the two witnesses.
pub fn suite_props(tower: &Tower, cfg: &CheckConfig) -> Result<Vec<Check>, SuiteError> {
    let f = tower.field();
    let q = tower.q();
    let mut out = Vec::new();

    // Smoke-scale code (q, 1, 1): rank and exhaustive distance floor.
    let spec = CodeSpec::new(q, 1, 1).expect("level 1");
    let places = tower.enumerate_split_places(1, cfg.place_budget)?;
    let gm = generator_matrix(f, &spec, &places, cfg.threads)
        .expect("spec and field agree");
    let rank = dimension_rank(f, &gm);
    out.push(Check::when(
        "code.rank",
        rank as u128 == spec.k_formula(),
        format!("rank {} vs formula {} at (q,1,1)", rank, spec.k_formula()),
    ));

    // Two routes to the designed distance: the pole budget n − l·m − Σ(...)
    // and the collapsed closed form.
    let (qi, i, l) = (q as i128, spec.level() as i128, spec.pole_order() as i128);
    let m = qi.pow(spec.level() as u32);
    let budget_route = spec.n() as i128 - l * m - (i - 1) * (qi - 1) * m - (qi - 2) * m;
    out.push(Check::when(
        "code.designed",
        budget_route == spec.designed_distance(),
        format!("designed distance {} agrees across both routes", spec.designed_distance()),
    ));

    // Exhaustive floor at the largest level-1 pole order that stays inside
    // the message budget (l = 1 for q = 3, l = 0 for q = 5, none beyond).
    let feasible = [1usize, 0].into_iter().find(|&l| {
        let s = CodeSpec::new(q, 1, l).expect("level 1");
        (f.order() as u128).checked_pow(s.k_formula() as u32)
            .is_some_and(|r| r <= cfg.message_budget as u128)
    });
    match feasible {
        Some(l) => {
            let spec = CodeSpec::new(q, 1, l).expect("level 1");
            let gm = generator_matrix(f, &spec, &places, cfg.threads).expect("valid spec");
            match exhaustive_min_distance(f, &gm, cfg.message_budget) {
                Ok(res) => {
                    out.push(Check::when(
                        "code.exhaustive-floor",
                        res.distance as i128 >= spec.designed_distance(),
                        format!(
                            "exact distance {} at (q,1,{l}) over {} codewords, designed bound {}",
                            res.distance,
                            res.codewords_searched,
                            spec.designed_distance()
                        ),
                    ));
                }
                Err(LrcError::BudgetExceeded { required, budget }) => {
                    return Err(SuiteError::Budget { required, budget: budget as u128 });
                }
                Err(e) => out.push(Check::fail("code.exhaustive-floor", e.to_string())),
            }
        }
        None => {
            out.push(Check::skip(
                "code.exhaustive-floor",
                format!("no level-1 pole order fits the budget {}", cfg.message_budget),
            ));
        }
    }

    if q < 5 {
        out.push(Check::skip("witness41", "needs odd q >= 5"));
        out.push(Check::skip("witness42", "needs odd q >= 5"));
        return Ok(out);
    }
    // Witness evaluation touches n places times ~k terms; past this cap the
    // suite defers to an explicit `distance --mode witnessNN` run. The cap
    // ignores the thread count so suite contents never depend on it.
    const WITNESS_COST_CAP: u128 = 5_000_000_000;
    for (id, l) in [
        ("witness41", q as usize),
        ("witness42", (q * ((q - 1) / 2 - 1)) as usize),
    ] {
        let spec = CodeSpec::new(q, 2, l).expect("level 2");
        let cost = spec.n() * spec.k_formula();
        if cost > WITNESS_COST_CAP {
            out.push(Check::skip(
                id,
                format!("evaluation cost {cost} over the suite cap; run distance --mode {id}"),
            ));
            continue;
        }
        let result = if id == "witness41" {
            witness41(tower, cfg.place_budget, cfg.threads)
        } else {
            witness42(tower, cfg.place_budget, cfg.threads)
        };
        out.extend(witness_check(id, result)?);
    }

    // Rank = formula at the witness parameters, where elimination stays
    // desk-scale.
    for (id, l) in [
        ("witness41.rank", q as usize),
        ("witness42.rank", (q * ((q - 1) / 2 - 1)) as usize),
    ] {
        let spec = CodeSpec::new(q, 2, l).expect("level 2");
        let cost = spec.k_formula() * spec.k_formula() * spec.n();
        if cost > 3_000_000_000 {
            out.push(Check::skip(id, format!("elimination cost {cost} over the desk-scale cap")));
            continue;
        }
        let places = tower.enumerate_split_places(2, cfg.place_budget)?;
        let gm = generator_matrix(f, &spec, &places, cfg.threads).expect("valid spec");
        let rank = dimension_rank(f, &gm);
        out.push(Check::when(
            id,
            rank as u128 == spec.k_formula(),
            format!("rank {} vs formula {} at (q,2,{l})", rank, spec.k_formula()),
        ));
    }
    Ok(out)
}

/// Seeded encode-erase-repair trials plus the recovery-set partition shape.
pub fn suite_recovery(
    tower: &Tower,
    cfg: &CheckConfig,
    trials: usize,
) -> Result<Vec<Check>, SuiteError> {
    let f = tower.field();
    let q = tower.q();
    // Prefer the level-2 code at l = q; drop to the level-1 smoke code when
    // its generator matrix would outgrow the desk (k·n entries).
    let level2 = CodeSpec::new(q, 2, q as usize).expect("level 2");
    let spec = if q >= 5 && level2.k_formula() * level2.n() <= 60_000_000 {
        level2
    } else {
        CodeSpec::new(q, 1, 1).expect("level 1")
    };
    // Each trial costs one encode (k·n multiplications); cap the total work
    // so large q stays interactive. The cap never bites below q = 11.
    let encode_cost = spec.k_formula() * spec.n();
    let trials = trials.min((2_400_000_000 / encode_cost.max(1)).max(50) as usize);
    let places = tower.enumerate_split_places(spec.level(), cfg.place_budget)?;
    let gm = generator_matrix(f, &spec, &places, cfg.threads).expect("valid spec");
    let sets = recovery_sets(&places, q).expect("full enumeration");

    let want_sets = places.len() / q as usize;
    let shape_ok = sets.len() == want_sets && sets.iter().all(|s| s.positions.len() == q as usize);
    let mut out = vec![Check::when(
        "recovery.sets",
        shape_ok,
        format!("{} disjoint sets of size q = {q}", sets.len()),
    )];

    let mut rng = SplitMix64::new(cfg.seed);
    let mut failures = 0usize;
    let mut locality_ok = true;
    for _ in 0..trials {
        let msg: Vec<Fe> = (0..gm.k())
            .map(|_| f.from_index(rng.below(f.order() as u64) as u32).unwrap())
            .collect();
        let cw = encode(f, &gm, &msg).expect("length matches");
        let erased = rng.below(places.len() as u64) as usize;
        let mut word: Vec<Option<Fe>> = cw.iter().map(|&x| Some(x)).collect();
        word[erased] = None;
        let set = set_of_position(&sets, erased).expect("partition covers all columns");
        match recover_erasure(f, set, &word, erased) {
            Ok(repair) => {
                if repair.value != cw[erased] {
                    failures += 1;
                }
                if repair.used_positions.len() as u32 != q - 1 {
                    locality_ok = false;
                }
            }
            Err(_) => failures += 1,
        }
    }
    out.push(Check::when(
        "recovery.roundtrip",
        failures == 0,
        format!("{trials} seeded trials at (q,{},{}), {failures} failures", spec.level(), spec.pole_order()),
    ));
    out.push(Check::when(
        "recovery.locality",
        locality_ok,
        format!("every repair read exactly r = q−1 = {} symbols", q - 1),
    ));
    Ok(out)
}

/// The exact-rational rate/distance statements.
pub fn suite_rational(q: u32) -> Vec<Check> {
    if q < 5 {
        return vec![
            Check::skip("margins.window", "needs odd q >= 5"),
            Check::skip("margins.special-point", "needs odd q >= 5"),
            Check::skip("lines.order", "needs odd q >= 5"),
        ];
    }
    let mut out = Vec::new();
    let two_over_q2 = Rational::new(2, (q as i128) * (q as i128));
    let mut all_hold = true;
    let mut all_margin = true;
    for i in 2..=(q - 1) as usize {
        for l in 1..=((q - 1) as usize * (q as usize - i)) {
            let m = window_margin(q, i, l).expect("window");
            if !m.holds {
                all_hold = false;
            }
            if m.margin != two_over_q2 {
                all_margin = false;
            }
        }
    }
    out.push(Check::when(
        "margins.window",
        all_hold,
        format!("R + ((q−1)/q)δ exceeds the level-i line on the whole window at q={q}"),
    ));
    out.push(Check::when(
        "margins.window-value",
        all_margin,
        format!("margin is exactly 2/q² = {two_over_q2} at the designed δ"),
    ));

    let mut equiv = true;
    for l in 1..=((q - 1) * (q - 2)) as usize {
        let m = window_margin(q, 2, l).expect("window");
        let above = m.point.rate > line_improved(q, m.point.delta);
        if m.holds != above || !above {
            equiv = false;
        }
    }
    out.push(Check::when(
        "margins.step2-line",
        equiv,
        "level-2 margin is equivalent to sitting above the improved line",
    ));

    match special_point(q) {
        Ok(s) => out.push(Check::when(
            "margins.special-point",
            s.rate_above_floor && s.delta_above_floor
                && s.margin_over_level2_line == two_over_q2,
            format!(
                "point (R, δ) = ({}, {}) sits 2/q² above the level-2 line",
                s.point.rate, s.point.delta
            ),
        )),
        Err(e) => out.push(Check::fail("margins.special-point", e.to_string())),
    }

    let mut order_ok = true;
    let mut roots_ok = true;
    for t in 0..100 {
        let d = Rational::new(t, 100);
        if line_improved(q, d) <= line_tbf(q, d) {
            order_ok = false;
        }
    }
    let qi = q as i128;
    if line_tbf(q, Rational::one() - Rational::new(3, qi + 1)) != Rational::zero()
        || line_improved(q, Rational::one() - Rational::new(2, qi)) != Rational::zero()
    {
        roots_ok = false;
    }
    out.push(Check::when(
        "lines.order",
        order_ok,
        "improved line dominates the baseline line for all sampled δ < 1",
    ));
    out.push(Check::when("lines.roots", roots_ok, "both lines vanish at their stated roots"));
    out
}

/// GV-type curve shape checks.
pub fn suite_curve(q: u32) -> Vec<Check> {
    let r = q - 1;
    let deltas: Vec<f64> = (0..100).map(|t| t as f64 / 100.0).collect();
    let curve = match gv_b2_curve(q, r, &deltas) {
        Ok(c) => c,
        Err(e) => return vec![Check::fail("curve.endpoint", e.to_string())],
    };
    let base = r as f64 / (r as f64 + 1.0);
    let endpoint = (curve.samples[0].1 - base).abs();
    let monotone = curve.samples.windows(2).all(|w| w[1].1 <= w[0].1 + 1e-12);
    let ceiling = curve.samples.iter().all(|&(_, v)| v <= base + 1e-12);
    vec![
        Check::when(
            "curve.endpoint",
            endpoint < 1e-4,
            format!("|R(0) − r/(r+1)| = {:.3e}", endpoint),
        ),
        Check::when("curve.monotone", monotone, "R(δ) non-increasing over the 100-point grid"),
        Check::when("curve.ceiling", ceiling, "R(δ) never exceeds r/(r+1)"),
    ]
}

/// Figure datasets regenerate with every point obeying its margin and the
/// level-2 cloud above the improved line.
pub fn suite_figures(q: u32) -> Vec<Check> {
    if q < 5 {
        return vec![Check::skip("figures.above-line", "needs odd q >= 5")];
    }
    let levels: Vec<usize> = (2..=(q - 1) as usize).collect();
    let data = match figure_dataset(q, &levels) {
        Ok(d) => d,
        Err(e) => return vec![Check::fail("figures.above-line", e.to_string())],
    };
    let mut margins_ok = true;
    let mut above_ok = true;
    for row in &data.rows {
        let m = window_margin(q, row.point.i, row.point.l).expect("window");
        if !m.holds {
            margins_ok = false;
        }
        if row.point.i == 2 && row.point.rate <= row.improved {
            above_ok = false;
        }
    }
    let special_count = data.rows.iter().filter(|r| r.special).count();
    vec![
        Check::when(
            "figures.margins",
            margins_ok,
            format!("{} points all satisfy their level-i margin", data.rows.len()),
        ),
        Check::when(
            "figures.above-line",
            above_ok,
            "every level-2 point lies strictly above the improved line",
        ),
        Check::when(
            "figures.special",
            special_count == 1,
            format!("{special_count} distinguished point (expected 1)"),
        ),
    ]
}

/// Runs one named suite. `all` aggregates everything the library can check
/// at this q, including the counts, recovery, rational and curve suites.
pub fn run_suite(tower: &Tower, name: &str, cfg: &CheckConfig) -> Result<Vec<Check>, SuiteError> {
    match name {
        "partitions" => suite_partitions(tower),
        "lemma" => suite_lemma(tower, lemma_max_level(tower, cfg), cfg),
        "corollary" => suite_corollary(tower, cfg),
        "props" => suite_props(tower, cfg),
        "all" => {
            let mut out = Vec::new();
            out.extend(suite_counts(tower, lemma_max_level(tower, cfg), cfg)?);
            out.extend(suite_partitions(tower)?);
            out.extend(suite_lemma(tower, lemma_max_level(tower, cfg), cfg)?);
            out.extend(suite_corollary(tower, cfg)?);
            out.extend(suite_props(tower, cfg)?);
            out.extend(suite_recovery(tower, cfg, 1000)?);
            out.extend(suite_rational(tower.q()));
            out.extend(suite_curve(tower.q()));
            out.extend(suite_figures(tower.q()));
            Ok(out)
        }
        other => Err(SuiteError::UnknownSuite(other.into())),
    }
}

/// Levels 0..=3 stay comfortably inside the default budget for q <= 7;
/// shrink for larger q rather than erroring.
fn lemma_max_level(tower: &Tower, cfg: &CheckConfig) -> usize {
    (0..=3usize)
        .take_while(|&j| tower.place_count(j) <= cfg.place_budget as u128)
        .last()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    fn tower(q: u32) -> Tower {
        Tower::new(build_field(q).unwrap())
    }

    fn assert_all_pass(checks: &[Check]) {
        for c in checks {
            assert!(c.pass, "{} failed: {}", c.id, c.detail);
        }
    }

    #[test]
    fn partitions_pass_at_5_and_7() {
        assert_all_pass(&suite_partitions(&tower(5)).unwrap());
        assert_all_pass(&suite_partitions(&tower(7)).unwrap());
    }

    #[test]
    fn counts_and_lemma_pass_at_3() {
        let t = tower(3);
        let cfg = CheckConfig::default();
        assert_all_pass(&suite_counts(&t, 3, &cfg).unwrap());
        assert_all_pass(&suite_lemma(&t, 3, &cfg).unwrap());
        assert_all_pass(&suite_corollary(&t, &cfg).unwrap());
    }

    #[test]
    fn props_pass_at_3_and_5() {
        let cfg = CheckConfig::default();
        assert_all_pass(&suite_props(&tower(3), &cfg).unwrap());
        assert_all_pass(&suite_props(&tower(5), &cfg).unwrap());
    }

    #[test]
    fn recovery_rational_curve_figures_pass_at_5() {
        let cfg = CheckConfig::default();
        assert_all_pass(&suite_recovery(&tower(5), &cfg, 100).unwrap());
        assert_all_pass(&suite_rational(5));
        assert_all_pass(&suite_curve(5));
        assert_all_pass(&suite_figures(5));
    }

    #[test]
    fn run_suite_dispatch_and_unknown() {
        let t = tower(3);
        let cfg = CheckConfig::default();
        assert!(run_suite(&t, "partitions", &cfg).is_ok());
        assert!(matches!(
            run_suite(&t, "bogus", &cfg),
            Err(SuiteError::UnknownSuite(_))
        ));
    }

    #[test]
    fn budget_errors_propagate_and_corollary_skips() {
        let t = tower(5);
        let cfg = CheckConfig { place_budget: 10, ..CheckConfig::default() };
        assert!(matches!(suite_props(&t, &cfg), Err(SuiteError::Budget { .. })));
        // The corollary check degrades to an explicit skip so `all` stays
        // runnable at large q under the default budget.
        let checks = suite_corollary(&t, &cfg).unwrap();
        assert_eq!(checks.len(), 1);
        assert!(checks[0].pass);
        assert!(checks[0].detail.contains("skipped"));
        assert!(checks[0].detail.contains("2500"));
    }
}
