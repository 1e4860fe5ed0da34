//! The recursive tower over GF(q²) defined by y^q + y = x^q/(x^(q−1)+1),
//! restricted to the part that matters for code construction: the degree-one
//! places above the splitting locus of the base field.
//!
//! A place at level i is stored as its coordinate tuple (α₀,…,α_i); every
//! place above the splitting locus is rational and unramified, hence
//! determined by these values. The pole place of x₀ is totally ramified and
//! is never materialized — it only enters through pole-order bookkeeping.
//!
//! Level-i enumeration yields exactly qⁱ·(q²−q) places in lexicographic
//! order of canonical coordinate indices; that order is the global column
//! order of every code built on top.

use std::fmt;
use std::io::{self, Write};

use crate::gf::{Fe, FieldSpec, GfError};

pub const DEFAULT_PLACE_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerError {
    /// The value has trace zero, i.e. lies outside the splitting locus.
    NotSplitting(Fe),
    /// Enumeration would exceed the configured budget.
    BudgetExceeded { required: u128, budget: usize },
    /// A coordinate tuple violates the tower recursion.
    InvalidPlace(String),
    /// Coordinate index beyond the place's level.
    LevelOutOfRange { j: usize, level: usize },
    Gf(GfError),
}

impl fmt::Display for TowerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerError::NotSplitting(x) => {
                write!(f, "value with index {x} has trace zero and is outside the splitting locus")
            }
            TowerError::BudgetExceeded { required, budget } => {
                write!(f, "enumeration needs {required} places but the budget is {budget}")
            }
            TowerError::InvalidPlace(msg) => write!(f, "invalid place: {msg}"),
            TowerError::LevelOutOfRange { j, level } => {
                write!(f, "coordinate {j} requested on a level-{level} place")
            }
            TowerError::Gf(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TowerError {}

impl From<GfError> for TowerError {
    fn from(e: GfError) -> Self {
        TowerError::Gf(e)
    }
}

/// A degree-one place of tower level i above the splitting locus, as the
/// coordinate tuple (α₀,…,α_i).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Place {
    coords: Vec<Fe>,
}

impl Place {
    pub fn from_coords(coords: Vec<Fe>) -> Self {
        assert!(!coords.is_empty(), "a place has at least the level-0 coordinate");
        Place { coords }
    }

    pub fn level(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Fe] {
        &self.coords
    }

    pub fn coord(&self, j: usize) -> Fe {
        self.coords[j]
    }

    pub fn top(&self) -> Fe {
        *self.coords.last().unwrap()
    }

    /// The level-(i−1) prefix shared by a recovery fiber.
    pub fn prefix(&self) -> &[Fe] {
        &self.coords[..self.coords.len() - 1]
    }
}

pub struct Tower {
    field: FieldSpec,
    splitting: Vec<Fe>,
}

impl Tower {
    pub fn new(field: FieldSpec) -> Self {
        let splitting = field
            .elements()
            .filter(|&x| field.trace(x).index() != 0)
            .collect();
        Tower { field, splitting }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// The q²−q values of the splitting locus (trace nonzero), ascending.
    pub fn splitting_values(&self) -> &[Fe] {
        &self.splitting
    }

    /// Number of level-i places above the splitting locus: qⁱ·(q²−q).
    /// Together with the totally ramified pole of x₀ this witnesses
    /// N(F_i) ≥ qⁱ·(q²−q) + 1. Saturates on absurd levels, which then fail
    /// every budget check.
    pub fn place_count(&self, level: usize) -> u128 {
        let q = self.q() as u128;
        let exp = u32::try_from(level).unwrap_or(u32::MAX);
        q.saturating_pow(exp).saturating_mul(q * q - q)
    }

    /// One step of the tower recursion: x^q/(x^(q−1)+1), which equals
    /// N(x)/Tr(x) and lands in GF(q)* for every splitting value.
    pub fn rhs_step(&self, alpha: Fe) -> Result<Fe, TowerError> {
        let f = &self.field;
        let tr = f.trace(alpha);
        if tr.index() == 0 {
            return Err(TowerError::NotSplitting(alpha));
        }
        Ok(f.mul(f.norm(alpha), f.inv(tr)?))
    }

    /// The class value β with α ∈ S_β; the same map as [`Self::rhs_step`]
    /// read as a coloring of splitting values.
    pub fn class_of_value(&self, alpha: Fe) -> Option<Fe> {
        self.rhs_step(alpha).ok()
    }

    /// Checks the full coordinate recursion of a place.
    pub fn validate_place(&self, place: &Place) -> Result<(), TowerError> {
        let f = &self.field;
        if f.trace(place.coord(0)).index() == 0 {
            return Err(TowerError::InvalidPlace(format!(
                "level-0 coordinate {} has trace zero",
                place.coord(0)
            )));
        }
        for k in 1..=place.level() {
            let want = self.rhs_step(place.coord(k - 1))?;
            if f.trace(place.coord(k)) != want {
                return Err(TowerError::InvalidPlace(format!(
                    "coordinate {} breaks the recursion at position {k}",
                    place.coord(k)
                )));
            }
        }
        Ok(())
    }

    /// The q places of level i+1 above a level-i place, in canonical order
    /// of the appended coordinate.
    pub fn extend_place(&self, place: &Place) -> Result<Vec<Place>, TowerError> {
        let beta = self.rhs_step(place.top())?;
        let fiber = self.field.solve_trace(beta)?;
        Ok(fiber
            .iter()
            .map(|&y| {
                let mut coords = place.coords().to_vec();
                coords.push(y);
                Place::from_coords(coords)
            })
            .collect())
    }

    /// All qⁱ·(q²−q) level-i places above the splitting locus, in
    /// lexicographic order of canonical coordinate indices.
    pub fn enumerate_split_places(
        &self,
        level: usize,
        budget: usize,
    ) -> Result<Vec<Place>, TowerError> {
        let required = self.place_count(level);
        if required > budget as u128 {
            return Err(TowerError::BudgetExceeded { required, budget });
        }
        let mut places: Vec<Place> = self
            .splitting
            .iter()
            .map(|&a| Place::from_coords(vec![a]))
            .collect();
        for _ in 0..level {
            let mut next = Vec::with_capacity(places.len() * self.q() as usize);
            for p in &places {
                next.extend(self.extend_place(p)?);
            }
            places = next;
        }
        debug_assert!(places.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(places.len() as u128, required);
        Ok(places)
    }

    /// Color of the level-j truncation of a place: the unique β with
    /// α_j ∈ S_β.
    pub fn color_of(&self, place: &Place, j: usize) -> Result<Fe, TowerError> {
        if j > place.level() {
            return Err(TowerError::LevelOutOfRange { j, level: place.level() });
        }
        self.rhs_step(place.coord(j))
    }
}

/// Genus of the level-j field of the tower, by the closed form:
/// (q^((j+1)/2) − 1)² for odd j and (q^(j/2+1) − 1)(q^(j/2) − 1) for even j.
#[allow(clippy::manual_div_ceil)] // (j+1)/2 is the exponent as written, exact for odd j
pub fn genus_gs(q: u32, j: u32) -> u128 {
    let q = q as u128;
    if j % 2 == 1 {
        let s = q.pow((j + 1) / 2) - 1;
        s * s
    } else {
        (q.pow(j / 2 + 1) - 1) * (q.pow(j / 2) - 1)
    }
}

/// Number of enumerated places whose j-th coordinate equals `alpha`:
/// q^level for splitting values and 0 otherwise.
pub fn zero_count_coordinate(places: &[Place], j: usize, alpha: Fe) -> usize {
    places.iter().filter(|p| p.coord(j) == alpha).count()
}

/// The two trace-indexed partitions that organize the splitting locus:
/// S_β = {α : N(α)/Tr(α) = β} and B_β = {α : Tr(α) = β}, for β ∈ GF(q)*.
pub struct TraceClassPartition {
    q: u32,
    s_classes: Vec<Vec<Fe>>,
    b_classes: Vec<Vec<Fe>>,
    class_lut: Vec<Option<Fe>>,
}

impl TraceClassPartition {
    pub fn new(tower: &Tower) -> Self {
        let f = tower.field();
        let q = f.q() as usize;
        let mut s_classes = vec![Vec::new(); q];
        let mut b_classes = vec![Vec::new(); q];
        let mut class_lut = vec![None; f.order() as usize];
        for &alpha in tower.splitting_values() {
            let beta = tower.rhs_step(alpha).expect("splitting value");
            s_classes[beta.index() as usize].push(alpha);
            class_lut[alpha.index() as usize] = Some(beta);
            b_classes[f.trace(alpha).index() as usize].push(alpha);
        }
        TraceClassPartition { q: f.q(), s_classes, b_classes, class_lut }
    }

    /// The q−1 class labels β, ascending.
    pub fn betas(&self) -> impl Iterator<Item = Fe> {
        (1..self.q as u16).map(Fe::raw)
    }

    pub fn s_class(&self, beta: Fe) -> &[Fe] {
        &self.s_classes[beta.index() as usize]
    }

    pub fn b_class(&self, beta: Fe) -> &[Fe] {
        &self.b_classes[beta.index() as usize]
    }

    /// The β with α ∈ S_β, None outside the splitting locus.
    pub fn class_of(&self, alpha: Fe) -> Option<Fe> {
        self.class_lut[alpha.index() as usize]
    }

    /// Labels of the classes met by B_β, ascending; the child colors that
    /// appear above a parent of color β. There are exactly (q+1)/2 of them.
    pub fn child_colors(&self, beta: Fe) -> Vec<Fe> {
        let mut out: Vec<Fe> = self
            .b_class(beta)
            .iter()
            .filter_map(|&a| self.class_of(a))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Labels β whose B_β meets S_color: the parent colors below a child of
    /// the given color.
    pub fn parent_colors(&self, color: Fe) -> Vec<Fe> {
        self.betas()
            .filter(|&beta| self.b_class(beta).iter().any(|a| self.class_of(*a) == Some(color)))
            .collect()
    }
}

/// Writes the place table as CSV: `place_id,alpha_0,...,alpha_i` with
/// coordinates as canonical indices.
pub fn write_places_csv<W: Write>(w: &mut W, level: usize, places: &[Place]) -> io::Result<()> {
    write!(w, "place_id")?;
    for j in 0..=level {
        write!(w, ",alpha_{j}")?;
    }
    writeln!(w)?;
    for (id, p) in places.iter().enumerate() {
        write!(w, "{id}")?;
        for &c in p.coords() {
            write!(w, ",{}", c.index())?;
        }
        writeln!(w)?;
    }
    Ok(())
}
