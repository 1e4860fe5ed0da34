//! Evaluation codes on the enumerated places: monomial basis, generator
//! matrix, dimension by elimination, designed distance, exact distance by
//! exhaustive search, and multivariate polynomial evaluation for the
//! witness constructions.
//!
//! The code of level i with pole order l evaluates the monomial space
//! spanned by x₀^e₀ · x₁^e₁ ⋯ x_i^e_i with 0 ≤ e₀ ≤ l, 0 ≤ e_j ≤ q−1 for
//! the middle levels and 0 ≤ e_i ≤ q−2, at all qⁱ(q²−q) enumerated places.
//! The top-degree cap q−2 is what makes every recovery fiber interpolable
//! from q−1 of its q members.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use crate::gf::{Fe, FieldSpec};
use crate::tower::{Place, TowerError};

pub const DEFAULT_MESSAGE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LrcError {
    InvalidSpec(String),
    LevelMismatch { expected: usize, got: usize },
    MessageLength { expected: usize, got: usize },
    /// A polynomial stepped outside the monomial space of the code.
    NotInSpace(String),
    BudgetExceeded { required: u128, budget: u64 },
    /// The zero code has no nonzero codeword to take a minimum over.
    ZeroCode,
    /// A deterministic witness construction could not complete.
    WitnessConstruction(String),
    /// A measured quantity contradicts the claimed value.
    ClaimMismatch { claim: String, expected: String, got: String },
    Tower(TowerError),
}

impl fmt::Display for LrcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LrcError::InvalidSpec(m) => write!(f, "invalid code spec: {m}"),
            LrcError::LevelMismatch { expected, got } => {
                write!(f, "level mismatch: expected {expected}, got {got}")
            }
            LrcError::MessageLength { expected, got } => {
                write!(f, "message length {got}, expected {expected}")
            }
            LrcError::NotInSpace(m) => write!(f, "function outside the monomial space: {m}"),
            LrcError::BudgetExceeded { required, budget } => {
                write!(f, "search needs {required} codewords but the budget is {budget}")
            }
            LrcError::ZeroCode => write!(f, "the zero code has no minimum distance"),
            LrcError::WitnessConstruction(m) => write!(f, "witness construction failed: {m}"),
            LrcError::ClaimMismatch { claim, expected, got } => {
                write!(f, "claim not reproduced: {claim}: expected {expected}, got {got}")
            }
            LrcError::Tower(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LrcError {}

impl From<TowerError> for LrcError {
    fn from(e: TowerError) -> Self {
        LrcError::Tower(e)
    }
}

/// Parameters (q, level i ≥ 1, pole order l ≥ 0) of the code C_i built from
/// the divisor l·P∞ on the base field.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct CodeSpec {
    q: u32,
    level: usize,
    pole_order: usize,
}

impl CodeSpec {
    /// Levels are capped at 20 so every derived quantity fits i128 for any
    /// supported q; real enumerations hit the place budget far earlier.
    pub const MAX_LEVEL: usize = 20;

    pub fn new(q: u32, level: usize, pole_order: usize) -> Result<Self, LrcError> {
        if level == 0 {
            return Err(LrcError::InvalidSpec("level must be at least 1".into()));
        }
        if level > Self::MAX_LEVEL {
            return Err(LrcError::InvalidSpec(format!(
                "level {level} exceeds the supported maximum {}",
                Self::MAX_LEVEL
            )));
        }
        if pole_order > 1_000_000 {
            return Err(LrcError::InvalidSpec(format!("pole order {pole_order} is out of range")));
        }
        Ok(CodeSpec { q, level, pole_order })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    /// Code length n = qⁱ(q²−q).
    pub fn n(&self) -> u128 {
        let q = self.q as u128;
        q.pow(self.level as u32) * (q * q - q)
    }

    /// Formula dimension k = (l+1)(q−1)q^(i−1).
    pub fn k_formula(&self) -> u128 {
        let q = self.q as u128;
        (self.pole_order as u128 + 1) * (q - 1) * q.pow(self.level as u32 - 1)
    }

    /// Locality r = q−1.
    pub fn locality(&self) -> u32 {
        self.q - 1
    }

    /// Extension degree m = qⁱ over the base field; also equals every
    /// h_j = [F_i : GF(q²)(x_j)].
    pub fn extension_degree(&self) -> u128 {
        (self.q as u128).pow(self.level as u32)
    }

    /// Degree-counting lower bound on the minimum distance:
    /// qⁱ·(q²−2q+2−l−(q−1)(i−1)). May be ≤ 0, in which case the bound is
    /// vacuous (reported, never an error).
    pub fn designed_distance(&self) -> i128 {
        let q = self.q as i128;
        let i = self.level as i128;
        let l = self.pole_order as i128;
        q.pow(self.level as u32) * (q * q - 2 * q + 2 - l - (q - 1) * (i - 1))
    }

    /// The (i, l) window in which the designed distance is positive:
    /// 1 ≤ i ≤ q−1 and 1 ≤ l ≤ (q−1)(q−i).
    pub fn in_positive_window(&self) -> bool {
        let q = self.q as usize;
        self.level >= 1
            && self.level < q
            && self.pole_order >= 1
            && self.pole_order <= (q - 1) * (q - self.level)
    }

    /// Largest allowed exponent per coordinate: l for x₀, q−1 for the middle
    /// coordinates, q−2 on top.
    pub fn exponent_caps(&self) -> Vec<u32> {
        let mut caps = Vec::with_capacity(self.level + 1);
        caps.push(self.pole_order as u32);
        for _ in 1..self.level {
            caps.push(self.q - 1);
        }
        caps.push(self.q - 2);
        caps
    }
}

/// Exponent tuple (e₀,…,e_i) of one basis monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }
}

/// The (l+1)(q−1)q^(i−1) basis monomials in lexicographic exponent order.
pub fn monomial_basis(spec: &CodeSpec) -> Vec<Monomial> {
    let caps = spec.exponent_caps();
    let mut out = Vec::new();
    let mut cur = vec![0u32; caps.len()];
    loop {
        out.push(Monomial::new(cur.clone()));
        // Odometer with the last position fastest = lexicographic order.
        let mut pos = caps.len();
        loop {
            if pos == 0 {
                debug_assert_eq!(out.len() as u128, spec.k_formula());
                return out;
            }
            pos -= 1;
            if cur[pos] < caps[pos] {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
        }
    }
}

/// Value of one monomial at one place: ∏ α_j^e_j.
pub fn eval_monomial(field: &FieldSpec, m: &Monomial, place: &Place) -> Result<Fe, LrcError> {
    if m.exps.len() != place.coords().len() {
        return Err(LrcError::LevelMismatch {
            expected: m.exps.len().saturating_sub(1),
            got: place.level(),
        });
    }
    let mut acc = field.one();
    for (&e, &a) in m.exps.iter().zip(place.coords()) {
        acc = field.mul(acc, field.pow(a, e as u64));
    }
    Ok(acc)
}

/// k×n table of monomial evaluations; rows follow the basis order, columns
/// the canonical place order.
pub struct GeneratorMatrix {
    k: usize,
    n: usize,
    entries: Vec<Fe>,
}

impl GeneratorMatrix {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.entries[r * self.n..(r + 1) * self.n]
    }

    pub fn entry(&self, r: usize, c: usize) -> Fe {
        self.entries[r * self.n + c]
    }

    /// Test/degenerate constructor from explicit rows.
    pub fn from_rows(rows: Vec<Vec<Fe>>) -> Self {
        let k = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(k * n);
        for r in rows {
            assert_eq!(r.len(), n);
            entries.extend(r);
        }
        GeneratorMatrix { k, n, entries }
    }
}

/// Per-place power tables big enough for the given caps; pows[j][e] = α_j^e.
fn power_tables(field: &FieldSpec, place: &Place, caps: &[u32]) -> Vec<Vec<Fe>> {
    place
        .coords()
        .iter()
        .zip(caps)
        .map(|(&a, &cap)| {
            let mut pows = Vec::with_capacity(cap as usize + 1);
            let mut acc = field.one();
            pows.push(acc);
            for _ in 0..cap {
                acc = field.mul(acc, a);
                pows.push(acc);
            }
            pows
        })
        .collect()
}

/// Builds the generator matrix. `threads` only distributes row chunks; the
/// result is identical for every thread count.
pub fn generator_matrix(
    field: &FieldSpec,
    spec: &CodeSpec,
    places: &[Place],
    threads: usize,
) -> Result<GeneratorMatrix, LrcError> {
    if spec.q != field.q() {
        return Err(LrcError::InvalidSpec(format!(
            "spec q={} does not match the field q={}",
            spec.q,
            field.q()
        )));
    }
    if let Some(p) = places.iter().find(|p| p.level() != spec.level) {
        return Err(LrcError::LevelMismatch { expected: spec.level, got: p.level() });
    }
    let monomials = monomial_basis(spec);
    let caps = spec.exponent_caps();
    let k = monomials.len();
    let n = places.len();
    let mut entries = vec![field.zero(); k * n];

    let threads = threads.max(1).min(k.max(1));
    let rows_per = k.div_ceil(threads);
    std::thread::scope(|scope| {
        let mut rest: &mut [Fe] = &mut entries;
        for chunk_idx in 0..threads {
            let lo = chunk_idx * rows_per;
            let hi = (lo + rows_per).min(k);
            if lo >= hi {
                break;
            }
            let (chunk, tail) = rest.split_at_mut((hi - lo) * n);
            rest = tail;
            let monomials = &monomials;
            let caps = &caps;
            scope.spawn(move || {
                for (c, place) in places.iter().enumerate() {
                    let pows = power_tables(field, place, caps);
                    for (local, m) in monomials[lo..hi].iter().enumerate() {
                        let mut acc = field.one();
                        for (j, &e) in m.exps().iter().enumerate() {
                            acc = field.mul(acc, pows[j][e as usize]);
                        }
                        chunk[local * n + c] = acc;
                    }
                }
            });
        }
    });
    Ok(GeneratorMatrix { k, n, entries })
}

/// Rank over GF(q²) by Gaussian elimination on a working copy.
pub fn dimension_rank(field: &FieldSpec, gm: &GeneratorMatrix) -> usize {
    let mut m = gm.entries.clone();
    let (k, n) = (gm.k, gm.n);
    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == k {
            break;
        }
        let Some(r) = (pivot_row..k).find(|&r| m[r * n + col].index() != 0) else {
            continue;
        };
        if r != pivot_row {
            for j in col..n {
                m.swap(r * n + j, pivot_row * n + j);
            }
        }
        let inv = field.inv(m[pivot_row * n + col]).expect("pivot nonzero");
        for j in col..n {
            m[pivot_row * n + j] = field.mul(m[pivot_row * n + j], inv);
        }
        for r2 in pivot_row + 1..k {
            let factor = m[r2 * n + col];
            if factor.index() != 0 {
                for j in col..n {
                    let t = field.mul(factor, m[pivot_row * n + j]);
                    m[r2 * n + j] = field.sub(m[r2 * n + j], t);
                }
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

/// Nonzero rows of the reduced row-echelon form: a basis of the row space.
pub fn row_space_basis(field: &FieldSpec, gm: &GeneratorMatrix) -> Vec<Vec<Fe>> {
    let mut m = gm.entries.clone();
    let (k, n) = (gm.k, gm.n);
    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == k {
            break;
        }
        let Some(r) = (pivot_row..k).find(|&r| m[r * n + col].index() != 0) else {
            continue;
        };
        if r != pivot_row {
            for j in 0..n {
                m.swap(r * n + j, pivot_row * n + j);
            }
        }
        let inv = field.inv(m[pivot_row * n + col]).expect("pivot nonzero");
        for j in 0..n {
            m[pivot_row * n + j] = field.mul(m[pivot_row * n + j], inv);
        }
        for r2 in 0..k {
            if r2 == pivot_row {
                continue;
            }
            let factor = m[r2 * n + col];
            if factor.index() != 0 {
                for j in 0..n {
                    let t = field.mul(factor, m[pivot_row * n + j]);
                    m[r2 * n + j] = field.sub(m[r2 * n + j], t);
                }
            }
        }
        pivot_row += 1;
    }
    (0..pivot_row).map(|r| m[r * n..(r + 1) * n].to_vec()).collect()
}

/// message · G.
pub fn encode(
    field: &FieldSpec,
    gm: &GeneratorMatrix,
    message: &[Fe],
) -> Result<Vec<Fe>, LrcError> {
    if message.len() != gm.k {
        return Err(LrcError::MessageLength { expected: gm.k, got: message.len() });
    }
    let mut out = vec![field.zero(); gm.n];
    for (r, &coeff) in message.iter().enumerate() {
        if coeff.index() == 0 {
            continue;
        }
        let row = gm.row(r);
        for (o, &g) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(coeff, g));
        }
    }
    Ok(out)
}

pub fn hamming_weight(word: &[Fe]) -> usize {
    word.iter().filter(|x| x.index() != 0).count()
}

/// A finitely supported multivariate polynomial in the coordinate functions
/// x₀,…,x_i, keyed by exponent tuple. Products keep exponents uncapped;
/// membership in a code's monomial space is asserted separately so that a
/// range overflow is visible instead of silently reduced.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyFunction {
    terms: BTreeMap<Vec<u32>, Fe>,
}

impl PolyFunction {
    pub fn zero() -> Self {
        PolyFunction::default()
    }

    pub fn constant(nvars: usize, c: Fe) -> Self {
        let mut terms = BTreeMap::new();
        if c.index() != 0 {
            terms.insert(vec![0; nvars], c);
        }
        PolyFunction { terms }
    }

    /// Builds a polynomial from explicit (exponent tuple, coefficient)
    /// pairs, dropping zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, Fe)>) -> Self {
        PolyFunction {
            terms: terms.into_iter().filter(|(_, c)| c.index() != 0).collect(),
        }
    }

    /// A univariate polynomial Σ coeffs[e]·x_var^e embedded in nvars
    /// variables.
    pub fn from_univariate(nvars: usize, var: usize, coeffs: &[Fe]) -> Self {
        assert!(var < nvars);
        let mut terms = BTreeMap::new();
        for (e, &c) in coeffs.iter().enumerate() {
            if c.index() != 0 {
                let mut key = vec![0u32; nvars];
                key[var] = e as u32;
                terms.insert(key, c);
            }
        }
        PolyFunction { terms }
    }

    /// ∏ (x_var − root) expanded into coefficients.
    pub fn from_roots(field: &FieldSpec, nvars: usize, var: usize, roots: &[Fe]) -> Self {
        let mut coeffs = vec![field.one()];
        for &r in roots {
            let neg_r = field.neg(r);
            let mut next = vec![field.zero(); coeffs.len() + 1];
            for (e, &c) in coeffs.iter().enumerate() {
                next[e + 1] = field.add(next[e + 1], c);
                next[e] = field.add(next[e], field.mul(neg_r, c));
            }
            coeffs = next;
        }
        PolyFunction::from_univariate(nvars, var, &coeffs)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], Fe)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, field: &FieldSpec, other: &PolyFunction) -> PolyFunction {
        let mut terms = self.terms.clone();
        for (e, &c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(|| field.zero());
            *entry = field.add(*entry, c);
        }
        terms.retain(|_, c| c.index() != 0);
        PolyFunction { terms }
    }

    pub fn mul(&self, field: &FieldSpec, other: &PolyFunction) -> PolyFunction {
        let mut terms: BTreeMap<Vec<u32>, Fe> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                assert_eq!(e1.len(), e2.len(), "mixed variable counts");
                let key: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let add = field.mul(*c1, *c2);
                let entry = terms.entry(key).or_insert_with(|| field.zero());
                *entry = field.add(*entry, add);
            }
        }
        terms.retain(|_, c| c.index() != 0);
        PolyFunction { terms }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Checks that every exponent tuple respects the code's caps.
    pub fn check_membership(&self, spec: &CodeSpec) -> Result<(), LrcError> {
        let caps = spec.exponent_caps();
        for key in self.terms.keys() {
            if key.len() != caps.len() {
                return Err(LrcError::NotInSpace(format!(
                    "term has {} variables, the space has {}",
                    key.len(),
                    caps.len()
                )));
            }
            for (j, (&e, &cap)) in key.iter().zip(&caps).enumerate() {
                if e > cap {
                    return Err(LrcError::NotInSpace(format!(
                        "exponent {e} of x_{j} exceeds the cap {cap}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn eval(&self, field: &FieldSpec, place: &Place) -> Fe {
        let mut acc = field.zero();
        for (exps, c) in self.terms() {
            let mut term = c;
            for (&e, &a) in exps.iter().zip(place.coords()) {
                term = field.mul(term, field.pow(a, e as u64));
            }
            acc = field.add(acc, term);
        }
        acc
    }

    /// Coefficient vector over the basis order of `spec`; fails if the
    /// polynomial leaves the space.
    pub fn to_message(&self, field: &FieldSpec, spec: &CodeSpec) -> Result<Vec<Fe>, LrcError> {
        self.check_membership(spec)?;
        let basis = monomial_basis(spec);
        Ok(basis
            .iter()
            .map(|m| self.terms.get(m.exps()).copied().unwrap_or_else(|| field.zero()))
            .collect())
    }
}

/// Number of enumerated places where the expanded polynomial vanishes.
/// Membership in the code's monomial space is required: the distance
/// arguments only apply inside the space. `threads` chunks the place range;
/// the count is a plain sum, identical for every thread count.
pub fn poly_zero_count(
    field: &FieldSpec,
    spec: &CodeSpec,
    f: &PolyFunction,
    places: &[Place],
    threads: usize,
) -> Result<usize, LrcError> {
    f.check_membership(spec)?;
    let caps: Vec<u32> = (0..=spec.level()).map(|j| f.degree_in(j)).collect();
    let terms: Vec<(&[u32], Fe)> = f.terms().collect();
    let count_range = |chunk: &[Place]| -> usize {
        let mut zeros = 0;
        for place in chunk {
            let pows = power_tables(field, place, &caps);
            let mut acc = field.zero();
            for (exps, c) in &terms {
                let mut term = *c;
                for (j, &e) in exps.iter().enumerate() {
                    term = field.mul(term, pows[j][e as usize]);
                }
                acc = field.add(acc, term);
            }
            if acc.index() == 0 {
                zeros += 1;
            }
        }
        zeros
    };
    let threads = threads.max(1).min(places.len().max(1));
    if threads == 1 {
        return Ok(count_range(places));
    }
    let per = places.len().div_ceil(threads);
    let count_range = &count_range;
    let zeros = std::thread::scope(|scope| {
        let handles: Vec<_> = places
            .chunks(per)
            .map(|chunk| scope.spawn(move || count_range(chunk)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker")).sum()
    });
    Ok(zeros)
}

#[derive(Debug)]
pub struct ExhaustiveResult {
    pub distance: usize,
    /// Number of nonzero codewords the search covers: (q²)^rank − 1.
    pub codewords_searched: u128,
}

/// Exact minimum Hamming weight over all nonzero codewords.
///
/// Scalar multiples share a weight, so only messages whose leading nonzero
/// coefficient is 1 are expanded; the count reported covers the full span.
/// Per-codeword scanning stops as soon as the running weight reaches the
/// current minimum.
pub fn exhaustive_min_distance(
    field: &FieldSpec,
    gm: &GeneratorMatrix,
    budget: u64,
) -> Result<ExhaustiveResult, LrcError> {
    let basis = row_space_basis(field, gm);
    let rank = basis.len();
    if rank == 0 {
        return Err(LrcError::ZeroCode);
    }
    let order = field.order() as u128;
    let required = order
        .checked_pow(rank as u32)
        .ok_or(LrcError::BudgetExceeded { required: u128::MAX, budget })?;
    if required > budget as u128 {
        return Err(LrcError::BudgetExceeded { required, budget });
    }
    let n = gm.n;
    let mut best = n + 1;
    let mut coeffs = vec![field.zero(); rank];
    for lead in 0..rank {
        // coeffs[lead] = 1, earlier coefficients 0, later ones sweep fully.
        for c in coeffs.iter_mut() {
            *c = field.zero();
        }
        coeffs[lead] = field.one();
        loop {
            let active: Vec<(&[Fe], Fe)> = coeffs
                .iter()
                .enumerate()
                .skip(lead)
                .filter(|(_, c)| c.index() != 0)
                .map(|(j, &c)| (basis[j].as_slice(), c))
                .collect();
            let mut weight = 0;
            for col in 0..n {
                let mut v = field.zero();
                for &(row, c) in &active {
                    v = field.add(v, field.mul(c, row[col]));
                }
                if v.index() != 0 {
                    weight += 1;
                    if weight >= best {
                        break;
                    }
                }
            }
            if weight < best {
                best = weight;
            }
            // Odometer over the suffix positions.
            let mut pos = rank;
            let done = loop {
                if pos == lead + 1 {
                    break true;
                }
                pos -= 1;
                let next = coeffs[pos].index() + 1;
                if next < field.order() as u16 {
                    coeffs[pos] = field.from_index(next as u32).unwrap();
                    break false;
                }
                coeffs[pos] = field.zero();
            };
            if done {
                break;
            }
        }
    }
    Ok(ExhaustiveResult { distance: best, codewords_searched: required - 1 })
}

/// Generator matrix CSV: `e_0,...,e_i,v_1,...,v_n`, one row per monomial,
/// entries as canonical indices.
pub fn write_generator_csv<W: Write>(
    w: &mut W,
    spec: &CodeSpec,
    gm: &GeneratorMatrix,
) -> io::Result<()> {
    let basis = monomial_basis(spec);
    assert_eq!(basis.len(), gm.k);
    for j in 0..=spec.level() {
        if j > 0 {
            write!(w, ",")?;
        }
        write!(w, "e_{j}")?;
    }
    for c in 1..=gm.n {
        write!(w, ",v_{c}")?;
    }
    writeln!(w)?;
    for (r, m) in basis.iter().enumerate() {
        for (j, e) in m.exps().iter().enumerate() {
            if j > 0 {
                write!(w, ",")?;
            }
            write!(w, "{e}")?;
        }
        for &v in gm.row(r) {
            write!(w, ",{}", v.index())?;
        }
        writeln!(w)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;
    use crate::rng::SplitMix64;
    use crate::tower::Tower;
    use std::collections::HashSet;

    fn setup(q: u32) -> (Tower, CodeSpec) {
        let tower = Tower::new(build_field(q).unwrap());
        let spec = CodeSpec::new(q, 1, 1).unwrap();
        (tower, spec)
    }

    #[test]
    fn monomial_basis_counts_and_order() {
        let spec = CodeSpec::new(3, 1, 1).unwrap();
        let basis = monomial_basis(&spec);
        let exps: Vec<&[u32]> = basis.iter().map(|m| m.exps()).collect();
        assert_eq!(exps, vec![&[0, 0][..], &[0, 1], &[1, 0], &[1, 1]]);

        let spec = CodeSpec::new(5, 2, 5).unwrap();
        assert_eq!(monomial_basis(&spec).len(), 120);
        assert_eq!(spec.k_formula(), 120);

        // l = 0 at level 1 leaves only the q−1 powers of the top coordinate.
        let spec = CodeSpec::new(7, 1, 0).unwrap();
        assert_eq!(monomial_basis(&spec).len(), 6);
    }

    #[test]
    fn eval_monomial_examples_and_random_cross_check() {
        let (tower, _) = setup(3);
        let f = tower.field();
        let places = tower.enumerate_split_places(1, 100).unwrap();
        let ones = Monomial::new(vec![0, 0]);
        for p in &places {
            assert_eq!(eval_monomial(f, &ones, p).unwrap(), f.one());
        }
        // (1,0) at a place with α₀ = 1.
        let p = &places[0];
        assert_eq!(p.coord(0), f.one());
        assert_eq!(eval_monomial(f, &Monomial::new(vec![1, 0]), p).unwrap(), f.one());
        // Level mismatch is rejected.
        assert!(matches!(
            eval_monomial(f, &Monomial::new(vec![1]), p),
            Err(LrcError::LevelMismatch { .. })
        ));

        // q=5, level 2: agree with an independent repeated-multiplication
        // oracle on random (monomial, place) pairs.
        let t5 = Tower::new(build_field(5).unwrap());
        let f5 = t5.field();
        let places5 = t5.enumerate_split_places(2, 1000).unwrap();
        let mut rng = SplitMix64::new(42);
        for _ in 0..10 {
            let m = Monomial::new(vec![
                rng.below(6) as u32,
                rng.below(5) as u32,
                rng.below(4) as u32,
            ]);
            let p = &places5[rng.below(500) as usize];
            let mut expect = f5.one();
            for (j, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    expect = f5.mul(expect, p.coord(j));
                }
            }
            assert_eq!(eval_monomial(f5, &m, p).unwrap(), expect);
        }
    }

    #[test]
    fn generator_matrix_shape_and_first_row() {
        let (tower, spec) = setup(3);
        let places = tower.enumerate_split_places(1, 100).unwrap();
        let gm = generator_matrix(tower.field(), &spec, &places, 1).unwrap();
        assert_eq!((gm.k(), gm.n()), (4, 18));
        assert!(gm.row(0).iter().all(|&x| x == tower.field().one()));

        let t5 = Tower::new(build_field(5).unwrap());
        let spec5 = CodeSpec::new(5, 2, 5).unwrap();
        let places5 = t5.enumerate_split_places(2, 1000).unwrap();
        let gm5 = generator_matrix(t5.field(), &spec5, &places5, 1).unwrap();
        assert_eq!((gm5.k(), gm5.n()), (120, 500));
    }

    #[test]
    fn generator_matrix_is_thread_count_independent() {
        let t5 = Tower::new(build_field(5).unwrap());
        let spec5 = CodeSpec::new(5, 2, 3).unwrap();
        let places5 = t5.enumerate_split_places(2, 1000).unwrap();
        let a = generator_matrix(t5.field(), &spec5, &places5, 1).unwrap();
        let b = generator_matrix(t5.field(), &spec5, &places5, 4).unwrap();
        assert_eq!(a.entries, b.entries);
    }

    #[test]
    fn rank_matches_formula_and_injectivity_oracle() {
        let (tower, spec) = setup(3);
        let f = tower.field();
        let places = tower.enumerate_split_places(1, 100).unwrap();
        let gm = generator_matrix(f, &spec, &places, 1).unwrap();
        assert_eq!(dimension_rank(f, &gm), 4);

        // Independent oracle: the evaluation map is injective iff all 9⁴
        // codewords are distinct.
        let mut seen = HashSet::new();
        let mut msg = vec![f.zero(); 4];
        loop {
            let cw: Vec<u16> =
                encode(f, &gm, &msg).unwrap().iter().map(|x| x.index()).collect();
            assert!(seen.insert(cw), "colliding codewords");
            let mut pos = 4;
            let done = loop {
                if pos == 0 {
                    break true;
                }
                pos -= 1;
                let next = msg[pos].index() + 1;
                if next < 9 {
                    msg[pos] = f.from_index(next as u32).unwrap();
                    break false;
                }
                msg[pos] = f.zero();
            };
            if done {
                break;
            }
        }
        assert_eq!(seen.len(), 9usize.pow(4));
    }

    #[test]
    fn rank_of_large_instance_and_zero_matrix() {
        let t5 = Tower::new(build_field(5).unwrap());
        let f5 = t5.field();
        let spec5 = CodeSpec::new(5, 2, 5).unwrap();
        let places5 = t5.enumerate_split_places(2, 1000).unwrap();
        let gm5 = generator_matrix(f5, &spec5, &places5, 2).unwrap();
        assert_eq!(dimension_rank(f5, &gm5), 120);

        let zero = GeneratorMatrix::from_rows(vec![vec![f5.zero(); 6]; 3]);
        assert_eq!(dimension_rank(f5, &zero), 0);
    }

    #[test]
    fn designed_distance_values() {
        assert_eq!(CodeSpec::new(3, 1, 1).unwrap().designed_distance(), 12);
        assert_eq!(CodeSpec::new(5, 2, 5).unwrap().designed_distance(), 200);
        assert_eq!(CodeSpec::new(7, 2, 14).unwrap().designed_distance(), 833);
        // Vacuous (≤ 0) is reported, not an error.
        assert!(CodeSpec::new(3, 2, 3).unwrap().designed_distance() <= 0);
        assert!(!CodeSpec::new(3, 2, 3).unwrap().in_positive_window());
        assert!(CodeSpec::new(5, 2, 5).unwrap().in_positive_window());
    }

    #[test]
    fn encode_edges_and_weight_floor() {
        let (tower, spec) = setup(3);
        let f = tower.field();
        let places = tower.enumerate_split_places(1, 100).unwrap();
        let gm = generator_matrix(f, &spec, &places, 1).unwrap();

        let zero_cw = encode(f, &gm, &[f.zero(); 4]).unwrap();
        assert!(zero_cw.iter().all(|x| x.index() == 0));

        let mut unit = vec![f.zero(); 4];
        unit[0] = f.one(); // constant monomial
        let ones = encode(f, &gm, &unit).unwrap();
        assert!(ones.iter().all(|&x| x == f.one()));

        assert!(matches!(
            encode(f, &gm, &[f.zero(); 3]),
            Err(LrcError::MessageLength { expected: 4, got: 3 })
        ));

        // Nonzero random messages never fall below the designed distance
        // (cross-checked against the exhaustive oracle in acceptance).
        let mut rng = SplitMix64::new(42);
        for _ in 0..50 {
            let msg: Vec<Fe> = (0..4)
                .map(|_| f.from_index(rng.below(9) as u32).unwrap())
                .collect();
            if msg.iter().all(|x| x.index() == 0) {
                continue;
            }
            assert!(hamming_weight(&encode(f, &gm, &msg).unwrap()) >= 12);
        }
    }

    #[test]
    fn poly_basics_and_zero_counts() {
        let (tower, spec) = setup(3);
        let f = tower.field();
        let places = tower.enumerate_split_places(1, 100).unwrap();

        let one = PolyFunction::constant(2, f.one());
        assert_eq!(poly_zero_count(f, &spec, &one, &places, 1).unwrap(), 0);

        // x₀ never vanishes: 0 is outside the splitting locus.
        let x0 = PolyFunction::from_univariate(2, 0, &[f.zero(), f.one()]);
        assert_eq!(poly_zero_count(f, &spec, &x0, &places, 1).unwrap(), 0);

        // x₀ − 1 vanishes on the q = 3 places with α₀ = 1.
        let x0m1 = PolyFunction::from_roots(f, 2, 0, &[f.one()]);
        assert_eq!(poly_zero_count(f, &spec, &x0m1, &places, 1).unwrap(), 3);

        // Out-of-space exponents are rejected.
        let too_big = PolyFunction::from_univariate(2, 1, &[f.zero(), f.zero(), f.one()]);
        assert!(matches!(
            poly_zero_count(f, &spec, &too_big, &places, 1),
            Err(LrcError::NotInSpace(_))
        ));
    }

    #[test]
    fn product_zero_count_is_subadditive_with_equality_iff_disjoint() {
        let (tower, _) = setup(3);
        let f = tower.field();
        let spec = CodeSpec::new(3, 1, 2).unwrap();
        let places = tower.enumerate_split_places(1, 100).unwrap();
        let vals: Vec<Fe> = tower.splitting_values().to_vec();
        for &a in &vals {
            for &b in &vals {
                let fa = PolyFunction::from_roots(f, 2, 0, &[a]);
                let fb = PolyFunction::from_roots(f, 2, 1, &[b]);
                let prod = fa.mul(f, &fb);
                let za = poly_zero_count(f, &spec, &fa, &places, 1).unwrap();
                let zb = poly_zero_count(f, &spec, &fb, &places, 1).unwrap();
                let zp = poly_zero_count(f, &spec, &prod, &places, 1).unwrap();
                assert!(zp <= za + zb);
                let disjoint = !places
                    .iter()
                    .any(|p| p.coord(0) == a && p.coord(1) == b);
                assert_eq!(zp == za + zb, disjoint);
            }
        }
    }

    #[test]
    fn poly_eval_matches_message_encoding() {
        let t5 = Tower::new(build_field(5).unwrap());
        let f = t5.field();
        let spec = CodeSpec::new(5, 2, 5).unwrap();
        let places = t5.enumerate_split_places(2, 1000).unwrap();
        let gm = generator_matrix(f, &spec, &places, 1).unwrap();

        let h0 = PolyFunction::from_roots(f, 3, 0, &[f.elem(1, 1), f.elem(2, 0)]);
        let h1 = PolyFunction::from_roots(f, 3, 1, &[f.elem(0, 2)]);
        let poly = h0.mul(f, &h1);
        let msg = poly.to_message(f, &spec).unwrap();
        let cw = encode(f, &gm, &msg).unwrap();
        for (p, &c) in places.iter().zip(&cw) {
            assert_eq!(poly.eval(f, p), c);
        }
        let zeros = poly_zero_count(f, &spec, &poly, &places, 1).unwrap();
        assert_eq!(zeros, cw.len() - hamming_weight(&cw));
    }

    #[test]
    fn exhaustive_distance_smoke_and_degenerates() {
        let (tower, spec) = setup(3);
        let f = tower.field();
        let places = tower.enumerate_split_places(1, 100).unwrap();
        let gm = generator_matrix(f, &spec, &places, 1).unwrap();
        let res = exhaustive_min_distance(f, &gm, DEFAULT_MESSAGE_BUDGET).unwrap();
        assert_eq!(res.codewords_searched, 6560);
        assert_eq!(res.distance, 12); // attains the designed bound

        // Degenerate all-ones single row: a repetition-style code of
        // distance n.
        let rep = GeneratorMatrix::from_rows(vec![vec![f.one(); 7]]);
        assert_eq!(exhaustive_min_distance(f, &rep, 1000).unwrap().distance, 7);

        // Zero matrix has no nonzero codeword.
        let zero = GeneratorMatrix::from_rows(vec![vec![f.zero(); 4]]);
        assert!(matches!(exhaustive_min_distance(f, &zero, 1000), Err(LrcError::ZeroCode)));

        // Budget errors name the required count.
        match exhaustive_min_distance(f, &gm, 100) {
            Err(LrcError::BudgetExceeded { required, budget: 100 }) => {
                assert_eq!(required, 6561);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn generator_csv_header_shape() {
        let (tower, spec) = setup(3);
        let places = tower.enumerate_split_places(1, 100).unwrap();
        let gm = generator_matrix(tower.field(), &spec, &places, 1).unwrap();
        let mut buf = Vec::new();
        write_generator_csv(&mut buf, &spec, &gm).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        let header = lines.next().unwrap();
        assert!(header.starts_with("e_0,e_1,v_1,"));
        assert!(header.ends_with(",v_18"));
        assert_eq!(lines.count(), 4);
        // First data row: constant monomial, all-ones evaluations.
        let first = text.lines().nth(1).unwrap();
        assert_eq!(first, "0,0,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1");
    }
}
