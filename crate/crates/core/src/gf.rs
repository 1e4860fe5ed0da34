//! Arithmetic in GF(q) and its quadratic extension GF(q²) for odd prime q.
//!
//! The extension is realized as GF(q)[t]/(t² − c) where c is the smallest
//! quadratic non-residue mod q, so the modulus is canonical for every q and
//! representations agree across runs. An element a + b·t is identified with
//! its canonical index a + b·q in `0..q²`; that index is the serialized form
//! everywhere (CSV, JSON).
//!
//! Multiplication, inversion, addition and the Galois data (Frobenius,
//! trace, norm, trace-equation fibers) are precomputed as lookup tables at
//! build time; q is capped at 31 so the largest table is 961×961.

use std::fmt;

pub const MIN_Q: u32 = 3;
pub const MAX_Q: u32 = 31;

/// An element of GF(q²), stored as its canonical index a + b·q.
///
/// The element lies in the base field GF(q) iff its index is below q.
/// `Ord` on elements is the canonical index order used for every
/// tie-breaking and enumeration decision in the crate.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fe(u16);

impl Fe {
    pub fn index(self) -> u16 {
        self.0
    }

    pub(crate) fn raw(index: u16) -> Fe {
        Fe(index)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfError {
    /// q is even, hence not an odd prime.
    EvenModulus(u32),
    /// q is odd but not prime (1 included).
    NotPrime(u32),
    /// q is an odd prime outside the supported 3..=31 window.
    OutOfRange(u32),
    /// Multiplicative inverse of zero requested.
    DivisionByZero,
    /// An operation restricted to GF(q) received a proper extension element.
    NotInBaseField(Fe),
    /// Canonical index outside 0..q².
    IndexOutOfRange { index: u32, order: u16 },
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::EvenModulus(q) => write!(f, "q={q} is not an odd prime (even)"),
            GfError::NotPrime(q) => write!(f, "q={q} is not an odd prime (not prime)"),
            GfError::OutOfRange(q) => {
                write!(f, "q={q} is outside the supported range {MIN_Q}..={MAX_Q}")
            }
            GfError::DivisionByZero => write!(f, "inverse of zero is undefined"),
            GfError::NotInBaseField(x) => {
                write!(f, "element with index {x} does not lie in the base field")
            }
            GfError::IndexOutOfRange { index, order } => {
                write!(f, "index {index} is outside 0..{order}")
            }
        }
    }
}

impl std::error::Error for GfError {}

/// GF(q²) with all operation tables baked in. Immutable after construction
/// and safe to share across threads; every operation is pure.
pub struct FieldSpec {
    q: u16,
    nonresidue: u16,
    order: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    neg: Vec<u16>,
    frob: Vec<u16>,
    trace: Vec<u16>,
    norm: Vec<u16>,
    /// fibers[b] = all y with y^q + y = b, sorted by canonical index.
    fibers: Vec<Vec<Fe>>,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest quadratic non-residue of GF(q), found by exhausting squares.
fn smallest_nonresidue(q: u32) -> u32 {
    let mut is_square = vec![false; q as usize];
    for x in 0..q {
        is_square[((x * x) % q) as usize] = true;
    }
    (1..q).find(|&c| !is_square[c as usize]).expect("odd q > 2 has a non-residue")
}

/// Builds the canonical GF(q²) for an odd prime q in 3..=31.
pub fn build_field(q: u32) -> Result<FieldSpec, GfError> {
    if q.is_multiple_of(2) {
        return Err(GfError::EvenModulus(q));
    }
    if !is_prime(q) {
        return Err(GfError::NotPrime(q));
    }
    if !(MIN_Q..=MAX_Q).contains(&q) {
        return Err(GfError::OutOfRange(q));
    }
    let c = smallest_nonresidue(q);
    let order = (q * q) as usize;
    let (qu, cu) = (q as usize, c as usize);

    let comp = |idx: usize| (idx % qu, idx / qu);

    let mut add = vec![0u16; order * order];
    let mut mul = vec![0u16; order * order];
    for x in 0..order {
        let (a1, b1) = comp(x);
        for y in 0..order {
            let (a2, b2) = comp(y);
            add[x * order + y] = ((a1 + a2) % qu + ((b1 + b2) % qu) * qu) as u16;
            // (a1 + b1 t)(a2 + b2 t) with t² = c
            let a = (a1 * a2 + cu * (b1 * b2 % qu)) % qu;
            let b = (a1 * b2 + a2 * b1) % qu;
            mul[x * order + y] = (a + b * qu) as u16;
        }
    }

    let mut neg = vec![0u16; order];
    let mut frob = vec![0u16; order];
    let mut trace = vec![0u16; order];
    let mut norm = vec![0u16; order];
    for x in 0..order {
        let (a, b) = comp(x);
        neg[x] = (((qu - a) % qu) + ((qu - b) % qu) * qu) as u16;
        // t^q = -t since c^((q-1)/2) = -1, hence sigma(a + bt) = a - bt.
        frob[x] = (a + ((qu - b) % qu) * qu) as u16;
        trace[x] = ((2 * a) % qu) as u16;
        norm[x] = ((a * a + (qu - cu) * (b * b % qu)) % qu) as u16;
    }

    let mut inv = vec![0u16; order];
    for x in 1..order {
        let row = &mul[x * order..(x + 1) * order];
        inv[x] = row.iter().position(|&p| p == 1).expect("unit has an inverse") as u16;
    }

    let mut fibers = vec![Vec::new(); qu];
    for x in 0..order {
        fibers[trace[x] as usize].push(Fe(x as u16));
    }

    Ok(FieldSpec {
        q: q as u16,
        nonresidue: c as u16,
        order: order as u16,
        add,
        mul,
        inv,
        neg,
        frob,
        trace,
        norm,
        fibers,
    })
}

impl FieldSpec {
    pub fn q(&self) -> u32 {
        self.q as u32
    }

    /// Cardinality q² of the extension field.
    pub fn order(&self) -> u32 {
        self.order as u32
    }

    /// The canonically chosen quadratic non-residue c with t² = c.
    pub fn nonresidue(&self) -> u32 {
        self.nonresidue as u32
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// The adjoined root t (index q).
    pub fn t(&self) -> Fe {
        Fe(self.q)
    }

    /// Element a + b·t from its coefficients.
    pub fn elem(&self, a: u32, b: u32) -> Fe {
        assert!(a < self.q as u32 && b < self.q as u32, "coefficients out of range");
        Fe((a + b * self.q as u32) as u16)
    }

    pub fn from_index(&self, index: u32) -> Result<Fe, GfError> {
        if index < self.order as u32 {
            Ok(Fe(index as u16))
        } else {
            Err(GfError::IndexOutOfRange { index, order: self.order })
        }
    }

    /// Constant-term coefficient of x.
    pub fn a(&self, x: Fe) -> u32 {
        (x.0 % self.q) as u32
    }

    /// t-coefficient of x.
    pub fn b(&self, x: Fe) -> u32 {
        (x.0 / self.q) as u32
    }

    pub fn in_base(&self, x: Fe) -> bool {
        x.0 < self.q
    }

    /// All q² elements, ascending by canonical index. This is the global
    /// tie-breaking order used everywhere.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.order).map(Fe)
    }

    /// The q base-field elements, ascending.
    pub fn base_elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    /// The q−1 nonzero base-field elements, ascending.
    pub fn base_units(&self) -> impl Iterator<Item = Fe> {
        (1..self.q).map(Fe)
    }

    #[inline]
    pub fn add(&self, x: Fe, y: Fe) -> Fe {
        Fe(self.add[x.0 as usize * self.order as usize + y.0 as usize])
    }

    #[inline]
    pub fn neg(&self, x: Fe) -> Fe {
        Fe(self.neg[x.0 as usize])
    }

    #[inline]
    pub fn sub(&self, x: Fe, y: Fe) -> Fe {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Fe, y: Fe) -> Fe {
        Fe(self.mul[x.0 as usize * self.order as usize + y.0 as usize])
    }

    pub fn inv(&self, x: Fe) -> Result<Fe, GfError> {
        if x.0 == 0 {
            Err(GfError::DivisionByZero)
        } else {
            Ok(Fe(self.inv[x.0 as usize]))
        }
    }

    /// x^e by square-and-multiply; x⁰ = 1 including 0⁰.
    pub fn pow(&self, x: Fe, mut e: u64) -> Fe {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The Frobenius x ↦ x^q, the only nontrivial automorphism fixing GF(q).
    #[inline]
    pub fn frobenius(&self, x: Fe) -> Fe {
        Fe(self.frob[x.0 as usize])
    }

    /// Trace to the base field: x^q + x.
    #[inline]
    pub fn trace(&self, x: Fe) -> Fe {
        Fe(self.trace[x.0 as usize])
    }

    /// Norm to the base field: x^(q+1).
    #[inline]
    pub fn norm(&self, x: Fe) -> Fe {
        Fe(self.norm[x.0 as usize])
    }

    pub fn trace_norm(&self, x: Fe) -> (Fe, Fe) {
        (self.trace(x), self.norm(x))
    }

    /// All q solutions y of y^q + y = beta, for beta in the base field,
    /// sorted by canonical index. Exactly one solution lies in GF(q)
    /// (namely beta/2); the rest pair up under the Frobenius.
    pub fn solve_trace(&self, beta: Fe) -> Result<&[Fe], GfError> {
        if !self.in_base(beta) {
            return Err(GfError::NotInBaseField(beta));
        }
        Ok(&self.fibers[beta.0 as usize])
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("q", &self.q)
            .field("nonresidue", &self.nonresidue)
            .field("order", &self.order)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn field(q: u32) -> FieldSpec {
        build_field(q).unwrap()
    }

    #[test]
    fn nonresidue_matches_square_exhaustion() {
        // Oracle: exhaust squares mod q, take the smallest missing class.
        for q in [3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let f = field(q);
            let squares: Vec<bool> = {
                let mut s = vec![false; q as usize];
                for x in 0..q {
                    s[((x * x) % q) as usize] = true;
                }
                s
            };
            assert!(!squares[f.nonresidue() as usize]);
            for c in 1..f.nonresidue() {
                assert!(squares[c as usize]);
            }
        }
        assert_eq!(field(3).nonresidue(), 2);
        assert_eq!(field(5).nonresidue(), 2);
        assert_eq!(field(7).nonresidue(), 3);
    }

    #[test]
    fn rejects_bad_moduli_with_distinct_diagnostics() {
        assert_eq!(build_field(4).unwrap_err(), GfError::EvenModulus(4));
        assert_eq!(build_field(2).unwrap_err(), GfError::EvenModulus(2));
        assert_eq!(build_field(9).unwrap_err(), GfError::NotPrime(9));
        assert_eq!(build_field(1).unwrap_err(), GfError::NotPrime(1));
        assert_eq!(build_field(33).unwrap_err(), GfError::NotPrime(33));
        assert_eq!(build_field(37).unwrap_err(), GfError::OutOfRange(37));
        assert!(build_field(4).unwrap_err().to_string().contains("not an odd prime"));
        let msgs: Vec<String> = [4u32, 9, 37]
            .iter()
            .map(|&q| build_field(q).unwrap_err().to_string())
            .collect();
        assert_ne!(msgs[0], msgs[1]);
        assert_ne!(msgs[1], msgs[2]);
    }

    #[test]
    fn mul_reduces_t_square_to_nonresidue() {
        // q=3: t·t = c = 2, by polynomial reduction mod t²−2.
        let f = field(3);
        assert_eq!(f.mul(f.t(), f.t()), f.elem(2, 0));
        // And in every field: t² equals the chosen non-residue.
        for q in [5u32, 7, 11] {
            let f = field(q);
            assert_eq!(f.mul(f.t(), f.t()), f.elem(f.nonresidue(), 0));
        }
    }

    #[test]
    fn inverse_of_one_and_unit_group_order() {
        for q in [3u32, 5, 7] {
            let f = field(q);
            assert_eq!(f.inv(f.one()).unwrap(), f.one());
            assert_eq!(f.inv(f.zero()).unwrap_err(), GfError::DivisionByZero);
        }
        // q=5: t^(q²−1) = 1 (multiplicative group has order q²−1).
        let f = field(5);
        assert_eq!(f.pow(f.t(), 24), f.one());
    }

    #[test]
    fn field_axioms_exhaustive_small_sampled_large() {
        for q in [3u32, 5, 7] {
            let f = field(q);
            let all: Vec<Fe> = f.elements().collect();
            for &x in &all {
                for &y in &all {
                    assert_eq!(f.add(x, y), f.add(y, x));
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    assert_eq!(f.sub(f.add(x, y), y), x);
                    if y.index() != 0 {
                        let inv = f.inv(y).unwrap();
                        assert_eq!(f.mul(f.mul(x, y), inv), x);
                    }
                    for &z in &all {
                        assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                        assert_eq!(
                            f.mul(x, f.add(y, z)),
                            f.add(f.mul(x, y), f.mul(x, z))
                        );
                    }
                }
            }
        }
        // Sampled for a larger field.
        let f = field(11);
        let mut r = SplitMix64::new(42);
        for _ in 0..2000 {
            let x = Fe(r.below(f.order() as u64) as u16);
            let y = Fe(r.below(f.order() as u64) as u16);
            let z = Fe(r.below(f.order() as u64) as u16);
            assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
            assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        }
    }

    #[test]
    fn frobenius_is_an_involution_fixing_exactly_the_base() {
        for q in [3u32, 5, 7] {
            let f = field(q);
            let mut fixed = 0;
            for x in f.elements() {
                assert_eq!(f.frobenius(f.frobenius(x)), x);
                if f.frobenius(x) == x {
                    fixed += 1;
                    assert!(f.in_base(x));
                }
            }
            assert_eq!(fixed, q);
        }
        // q=3: t³ = t·t² = 2t.
        let f = field(3);
        assert_eq!(f.frobenius(f.t()), f.elem(0, 2));
        assert_eq!(f.frobenius(f.t()), f.pow(f.t(), 3));
    }

    #[test]
    fn frobenius_is_a_field_automorphism() {
        let f = field(5);
        let all: Vec<Fe> = f.elements().collect();
        for &x in &all {
            assert_eq!(f.frobenius(x), f.pow(x, 5));
            for &y in &all {
                assert_eq!(f.frobenius(f.add(x, y)), f.add(f.frobenius(x), f.frobenius(y)));
                assert_eq!(f.frobenius(f.mul(x, y)), f.mul(f.frobenius(x), f.frobenius(y)));
            }
        }
    }

    #[test]
    fn trace_and_norm_against_power_definitions() {
        // trace(x) = x^q + x and norm(x) = x^(q+1), both in the base field.
        for q in [3u32, 5] {
            let f = field(q);
            for x in f.elements() {
                let tr = f.add(f.pow(x, q as u64), x);
                let nm = f.pow(x, (q + 1) as u64);
                assert_eq!(f.trace(x), tr);
                assert_eq!(f.norm(x), nm);
                assert!(f.in_base(tr));
                assert!(f.in_base(nm));
            }
        }
        let f = field(3);
        assert_eq!(f.trace(f.t()), f.zero());
        for q in [3u32, 5, 7, 11] {
            let f = field(q);
            assert_eq!(f.trace(f.one()), f.elem(2 % q, 0));
            assert_eq!(f.norm(f.one()), f.one());
        }
    }

    #[test]
    fn trace_is_linear_and_surjective_with_fibers_of_size_q() {
        let f = field(5);
        let all: Vec<Fe> = f.elements().collect();
        for &x in &all {
            for &y in &all {
                assert_eq!(f.trace(f.add(x, y)), f.add(f.trace(x), f.trace(y)));
            }
            for s in f.base_elements() {
                assert_eq!(f.trace(f.mul(s, x)), f.mul(s, f.trace(x)));
            }
        }
        for beta in f.base_elements() {
            assert_eq!(all.iter().filter(|&&x| f.trace(x) == beta).count(), 5);
        }
    }

    #[test]
    fn norm_is_multiplicative_with_unit_fibers_of_size_q_plus_one() {
        let f = field(7);
        let all: Vec<Fe> = f.elements().collect();
        for &x in &all {
            for &y in &all {
                assert_eq!(f.norm(f.mul(x, y)), f.mul(f.norm(x), f.norm(y)));
            }
        }
        for beta in f.base_units() {
            assert_eq!(all.iter().filter(|&&x| f.norm(x) == beta).count(), 8);
        }
    }

    #[test]
    fn at_most_two_elements_share_trace_and_norm() {
        let f = field(5);
        for tr in f.base_elements() {
            for nm in f.base_elements() {
                let count = f
                    .elements()
                    .filter(|&x| f.trace(x) == tr && f.norm(x) == nm)
                    .count();
                assert!(count <= 2, "({tr},{nm}) shared by {count}");
            }
        }
    }

    #[test]
    fn solve_trace_fibers() {
        // q=3, beta=0: exactly the multiples of t.
        let f = field(3);
        let fiber = f.solve_trace(f.zero()).unwrap();
        assert_eq!(fiber, &[f.elem(0, 0), f.elem(0, 1), f.elem(0, 2)]);
        // beta=2 always contains 1 as its unique base-field solution.
        for q in [3u32, 5, 7] {
            let f = field(q);
            let fiber = f.solve_trace(f.elem(2 % q, 0)).unwrap();
            assert!(fiber.contains(&f.one()));
            assert_eq!(fiber.iter().filter(|&&y| f.in_base(y)).count(), 1);
        }
        // q=5: the 5 fibers partition the 25 elements; each fiber splits as
        // one base solution plus (q−1)/2 Frobenius pairs.
        let f = field(5);
        let mut seen = [false; 25];
        for beta in f.base_elements() {
            let fiber = f.solve_trace(beta).unwrap();
            assert_eq!(fiber.len(), 5);
            for &y in fiber {
                assert!(!seen[y.index() as usize]);
                seen[y.index() as usize] = true;
                assert!(fiber.contains(&f.frobenius(y)));
            }
        }
        assert!(seen.iter().all(|&s| s));
        // Extension elements are rejected.
        assert_eq!(f.solve_trace(f.t()).unwrap_err(), GfError::NotInBaseField(f.t()));
    }

    #[test]
    fn canonical_enumeration_order() {
        let f = field(3);
        let all: Vec<Fe> = f.elements().collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], f.zero());
        assert_eq!(all[1], f.one());
        assert_eq!(field(5).elements().count(), 25);
        // q=7: index 7 is t (a=0, b=1).
        let f7 = field(7);
        assert_eq!(f7.from_index(7).unwrap(), f7.t());
        assert!(f7.from_index(49).is_err());
    }
}
