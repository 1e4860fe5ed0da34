//! Deterministic maximal-zero witnesses for the level-2 codes, and a search
//! heuristic for the zero budget at level ≥ 3.
//!
//! Both witnesses are products h₀(x₀)·h₁(x₁)·h₂(x₂) of linear factors whose
//! zero sets are pairwise disjoint by construction, so the zero counts add
//! up to exactly the degree budget of the space — which pins the exact
//! minimum distance to the designed bound. Every "choose" step is resolved
//! by canonical field order, so a witness is reproducible bit-for-bit.
//!
//! `witness41` works at pole order l = q and certifies
//! d = q²(q²−4q+3); `witness42` works at l = q((q−1)/2 − 1) and certifies
//! d = ½·q²(q²−3q+6). Both need odd q ≥ 5 for their value pools to be
//! large enough.

use crate::gf::Fe;
use crate::lrc::{poly_zero_count, CodeSpec, LrcError, PolyFunction};
use crate::rng::SplitMix64;
use crate::tower::{Place, Tower, TraceClassPartition};

pub struct WitnessReport {
    pub spec: CodeSpec,
    pub poly: PolyFunction,
    /// Roots of the three univariate factors, per coordinate.
    pub factor_roots: [Vec<Fe>; 3],
    pub zeros: usize,
    pub weight: usize,
    /// Extra context surfaced to the user alongside the result.
    pub note: Option<String>,
}

fn require_q_at_least_5(tower: &Tower) -> Result<(), LrcError> {
    if tower.q() < 5 {
        return Err(LrcError::InvalidSpec(format!(
            "witness constructions need odd q >= 5, got q={}",
            tower.q()
        )));
    }
    Ok(())
}

fn claim(claim: &str, expected: impl ToString, got: impl ToString) -> LrcError {
    LrcError::ClaimMismatch {
        claim: claim.into(),
        expected: expected.to_string(),
        got: got.to_string(),
    }
}

fn check_degrees(f: &PolyFunction, want: &[u32]) -> Result<(), LrcError> {
    for (j, &w) in want.iter().enumerate() {
        let got = f.degree_in(j);
        if got != w {
            return Err(claim(&format!("witness degree in x_{j}"), w, got));
        }
    }
    Ok(())
}

/// A fully constructed witness candidate, before its zero count is
/// measured against the claimed values.
struct Candidate {
    spec: CodeSpec,
    poly: PolyFunction,
    factor_roots: [Vec<Fe>; 3],
    /// Zero count the construction argument promises.
    expected_zeros: u128,
    note: Option<String>,
}

fn finish_witness(
    tower: &Tower,
    candidate: Candidate,
    places: &[Place],
    threads: usize,
) -> Result<WitnessReport, LrcError> {
    let Candidate { spec, poly, factor_roots, expected_zeros, note } = candidate;
    poly.check_membership(&spec)?;
    let zeros = poly_zero_count(tower.field(), &spec, &poly, places, threads)?;
    if zeros as u128 != expected_zeros {
        return Err(claim("witness zero count", expected_zeros, zeros));
    }
    let weight = places.len() - zeros;
    let designed = spec.designed_distance();
    if designed != weight as i128 {
        return Err(claim("witness weight vs designed bound", designed, weight));
    }
    Ok(WitnessReport { spec, poly, factor_roots, zeros, weight, note })
}

/// Level-2 witness at pole order l = q.
///
/// h₀ kills the places over the first class S_1; their next coordinates all
/// have trace 1, so h₁ kills a class that meets that trace fiber in a single
/// base-field point, minus the fiber itself; h₂ then spends the remaining
/// q−2 top-level factors on splitting values that no previous zero attains.
pub fn witness41(
    tower: &Tower,
    place_budget: usize,
    threads: usize,
) -> Result<WitnessReport, LrcError> {
    require_q_at_least_5(tower)?;
    let q = tower.q();
    let field = tower.field();
    let spec = CodeSpec::new(q, 2, q as usize)?;
    let part = TraceClassPartition::new(tower);

    let beta1 = field.one();
    let s1 = part.s_class(beta1);
    if s1.len() as u32 != q {
        return Err(LrcError::WitnessConstruction(format!(
            "|S_1| = {}, expected q = {q}",
            s1.len()
        )));
    }
    let h0 = PolyFunction::from_roots(field, 3, 0, s1);

    let b1 = part.b_class(beta1);
    let beta_star = part
        .betas()
        .find(|&b| part.s_class(b).iter().filter(|a| b1.contains(a)).count() == 1)
        .ok_or_else(|| {
            LrcError::WitnessConstruction("no class meets B_1 in exactly one point".into())
        })?;
    let roots1: Vec<Fe> = part
        .s_class(beta_star)
        .iter()
        .copied()
        .filter(|a| !b1.contains(a))
        .collect();
    if roots1.len() as u32 != q - 1 {
        return Err(LrcError::WitnessConstruction(format!(
            "|S_{beta_star} \\ B_1| = {}, expected q-1",
            roots1.len()
        )));
    }
    let h1 = PolyFunction::from_roots(field, 3, 1, &roots1);

    // Top-level values already consumed by zeros of h₀·h₁.
    let places = tower.enumerate_split_places(2, place_budget)?;
    let order = field.order() as usize;
    let mut is_h0_root = vec![false; order];
    for &a in s1 {
        is_h0_root[a.index() as usize] = true;
    }
    let mut is_h1_root = vec![false; order];
    for &a in &roots1 {
        is_h1_root[a.index() as usize] = true;
    }
    let mut forbidden = vec![false; order];
    for p in &places {
        if is_h0_root[p.coord(0).index() as usize] || is_h1_root[p.coord(1).index() as usize] {
            forbidden[p.coord(2).index() as usize] = true;
        }
    }
    let gammas: Vec<Fe> = tower
        .splitting_values()
        .iter()
        .copied()
        .filter(|a| !forbidden[a.index() as usize])
        .take(q as usize - 2)
        .collect();
    if gammas.len() as u32 != q - 2 {
        return Err(LrcError::WitnessConstruction(format!(
            "only {} admissible top-level values, need q-2",
            gammas.len()
        )));
    }
    let h2 = PolyFunction::from_roots(field, 3, 2, &gammas);

    let f = h0.mul(field, &h1).mul(field, &h2);
    check_degrees(&f, &[q, q - 1, q - 2])?;
    let q128 = q as u128;
    let candidate = Candidate {
        spec,
        poly: f,
        factor_roots: [s1.to_vec(), roots1, gammas],
        expected_zeros: q128 * q128 * (3 * q128 - 3),
        note: None,
    };
    finish_witness(tower, candidate, &places, threads)
}

/// Level-2 witness at pole order l = q((q−1)/2 − 1).
///
/// H₀ collects every base value none of whose level-1 extensions has its
/// coordinate in S_1 (a union of whole classes); H₁ takes q−1 level-1 values
/// outside S_1 whose parents avoid H₀; H₂ takes q−2 values inside the trace
/// fiber B_1, whose zeros all have their level-1 coordinate in S_1 and so
/// cannot meet the earlier zero sets.
pub fn witness42(
    tower: &Tower,
    place_budget: usize,
    threads: usize,
) -> Result<WitnessReport, LrcError> {
    require_q_at_least_5(tower)?;
    let q = tower.q();
    let field = tower.field();
    let l = (q * ((q - 1) / 2 - 1)) as usize;
    let spec = CodeSpec::new(q, 2, l)?;
    let part = TraceClassPartition::new(tower);

    let beta1 = field.one();
    let s1 = part.s_class(beta1);
    let meets_s1 = |beta: Fe| part.b_class(beta).iter().any(|a| s1.contains(a));

    let h0_roots: Vec<Fe> = tower
        .splitting_values()
        .iter()
        .copied()
        .filter(|&a| {
            let class = part.class_of(a).expect("splitting value has a class");
            !meets_s1(class)
        })
        .collect();
    if h0_roots.len() != l {
        return Err(LrcError::WitnessConstruction(format!(
            "|H_0| = {}, expected q((q-1)/2 - 1) = {l}",
            h0_roots.len()
        )));
    }
    let h0 = PolyFunction::from_roots(field, 3, 0, &h0_roots);

    let pool: Vec<Fe> = tower
        .splitting_values()
        .iter()
        .copied()
        .filter(|&a| !s1.contains(&a) && meets_s1(field.trace(a)))
        .collect();
    if (pool.len() as u32) < q - 1 {
        return Err(LrcError::WitnessConstruction(format!(
            "level-1 value pool has {} elements, need q-1",
            pool.len()
        )));
    }
    debug_assert_eq!(pool.len() as u32, q * (q - 1) / 2);
    let h1_roots: Vec<Fe> = pool.into_iter().take(q as usize - 1).collect();
    let h1 = PolyFunction::from_roots(field, 3, 1, &h1_roots);

    let h2_roots: Vec<Fe> = part.b_class(beta1).iter().copied().take(q as usize - 2).collect();
    if h2_roots.len() as u32 != q - 2 {
        return Err(LrcError::WitnessConstruction(format!(
            "|H_2| = {}, expected q-2",
            h2_roots.len()
        )));
    }
    let h2 = PolyFunction::from_roots(field, 3, 2, &h2_roots);

    let f = h0.mul(field, &h1).mul(field, &h2);
    check_degrees(&f, &[l as u32, q - 1, q - 2])?;
    let q128 = q as u128;
    let alt = q * (q - 1) / 2;
    let alt_spec = CodeSpec::new(q, 2, alt as usize)?;
    let note = format!(
        "pole order l = q((q-1)/2 - 1) = {l}; the nearby value q(q-1)/2 = {alt} would give \
         k = {} and designed distance {} and is not the one this construction certifies",
        alt_spec.k_formula(),
        alt_spec.designed_distance()
    );
    let places = tower.enumerate_split_places(2, place_budget)?;
    let candidate = Candidate {
        spec,
        poly: f,
        factor_roots: [h0_roots, h1_roots, h2_roots],
        expected_zeros: q128 * q128 * (q128 * q128 + q128 - 6) / 2,
        note: Some(note),
    };
    finish_witness(tower, candidate, &places, threads)
}

#[derive(Debug)]
pub struct ExploreReport {
    pub spec: CodeSpec,
    /// Largest number of zeros any searched product attains.
    pub best_zeros: usize,
    /// The degree budget (l + (i−1)(q−1) + (q−2))·qⁱ an in-space function
    /// can never exceed.
    pub zero_budget: u128,
    /// Whether the search met the budget. The search is a lower bound and
    /// settles nothing when this is false.
    pub reached_budget: bool,
    pub evaluations: u64,
    /// The best factor multiset found, as (coordinate, root) pairs.
    pub factors: Vec<(usize, Fe)>,
}

struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet { words: vec![0; bits.div_ceil(64)] }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn gain_over(&self, covered: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&covered.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }
}

/// Greedy plus seeded-random search for products of linear factors with many
/// zeros at level i ≥ 3. Reports the best zero count found and whether it
/// reaches the degree budget; it never claims to settle anything beyond the
/// searched products.
pub fn explore_conjecture(
    tower: &Tower,
    spec: &CodeSpec,
    place_budget: usize,
    eval_budget: u64,
    seed: u64,
) -> Result<ExploreReport, LrcError> {
    if spec.level() < 3 {
        return Err(LrcError::InvalidSpec(format!(
            "the exploration targets level >= 3, got {}",
            spec.level()
        )));
    }
    if spec.q() != tower.q() {
        return Err(LrcError::InvalidSpec("spec/tower q mismatch".into()));
    }
    if eval_budget == 0 {
        return Err(LrcError::BudgetExceeded { required: 1, budget: 0 });
    }
    let places = tower.enumerate_split_places(spec.level(), place_budget)?;
    let n = places.len();
    let caps = spec.exponent_caps();
    let nvars = caps.len();
    let values = tower.splitting_values();

    // Zero set of x_j − α for every coordinate j and splitting value α.
    let mut slots: Vec<(usize, Fe, BitSet)> = Vec::with_capacity(nvars * values.len());
    for j in 0..nvars {
        for &a in values {
            let mut bits = BitSet::new(n);
            for (idx, p) in places.iter().enumerate() {
                if p.coord(j) == a {
                    bits.set(idx);
                }
            }
            slots.push((j, a, bits));
        }
    }

    let mut evaluations: u64 = 0;
    let mut best_zeros = 0usize;
    let mut best_factors: Vec<(usize, Fe)> = Vec::new();

    // Greedy phase: take the factor with the largest fresh coverage until
    // the caps or the budget run out. Ties break on slot order (coordinate,
    // then canonical value).
    let mut covered = BitSet::new(n);
    let mut used = vec![0u32; nvars];
    let mut chosen = vec![false; slots.len()];
    let mut greedy_factors: Vec<(usize, Fe)> = Vec::new();
    'greedy: loop {
        let mut best_slot: Option<(usize, usize)> = None; // (gain, index)
        for (idx, (j, _, bits)) in slots.iter().enumerate() {
            if chosen[idx] || used[*j] >= caps[*j] {
                continue;
            }
            if evaluations == eval_budget {
                break 'greedy;
            }
            evaluations += 1;
            let gain = bits.gain_over(&covered);
            if gain > best_slot.map_or(0, |(g, _)| g) {
                best_slot = Some((gain, idx));
            }
        }
        match best_slot {
            Some((gain, idx)) if gain > 0 => {
                covered.union_with(&slots[idx].2);
                chosen[idx] = true;
                used[slots[idx].0] += 1;
                greedy_factors.push((slots[idx].0, slots[idx].1));
            }
            _ => break,
        }
    }
    let greedy_zeros = covered.count();
    if greedy_zeros > best_zeros {
        best_zeros = greedy_zeros;
        best_factors = greedy_factors.clone();
    }

    // Random phase: fill every cap with distinct random roots per
    // coordinate and keep the best union seen.
    let mut rng = SplitMix64::new(seed);
    while evaluations < eval_budget {
        evaluations += 1;
        let mut covered = BitSet::new(n);
        let mut factors: Vec<(usize, Fe)> = Vec::new();
        for (j, &cap) in caps.iter().enumerate() {
            let take = (cap as usize).min(values.len());
            // Partial Fisher-Yates over the value indices.
            let mut idxs: Vec<usize> = (0..values.len()).collect();
            for t in 0..take {
                let pick = t + rng.below((idxs.len() - t) as u64) as usize;
                idxs.swap(t, pick);
                let a = values[idxs[t]];
                factors.push((j, a));
                covered.union_with(&slots[j * values.len() + idxs[t]].2);
            }
        }
        let zeros = covered.count();
        if zeros > best_zeros {
            best_zeros = zeros;
            best_factors = factors;
        }
    }

    let q = spec.q() as u128;
    let i = spec.level() as u128;
    let l = spec.pole_order() as u128;
    let zero_budget = (l + (i - 1) * (q - 1) + (q - 2)) * q.pow(spec.level() as u32);
    best_factors.sort_unstable();
    Ok(ExploreReport {
        spec: *spec,
        best_zeros,
        zero_budget,
        reached_budget: best_zeros as u128 == zero_budget,
        evaluations,
        factors: best_factors,
    })
}
