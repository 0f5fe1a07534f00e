//! Vectors, dual vectors and projective classes over F₅.
//!
//! Single systems live in P¹(F₅) (2 components) and pairs in P³(F₅)
//! (4 components). Two-system vectors use the subsystem-1-major index
//! convention: component `2*i + j` is the coefficient of `|i⟩ ⊗ |j⟩`.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::F5;

/// A column vector over F₅. May be zero; only [`State`] guarantees otherwise.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ket<const N: usize>(pub [F5; N]);

/// A row (dual) vector over F₅.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bra<const N: usize>(pub [F5; N]);

/// A projective class, stored as its representative whose first nonzero
/// component is `1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State<const N: usize>(Ket<N>);

pub type SingleState = State<2>;
pub type PairState = State<4>;

fn components<const N: usize>(values: [i32; N]) -> [F5; N] {
    values.map(F5::from)
}

impl<const N: usize> Ket<N> {
    pub fn new(values: [i32; N]) -> Self {
        Ket(components(values))
    }

    pub fn zero() -> Self {
        Ket([F5::ZERO; N])
    }

    pub fn components(&self) -> &[F5; N] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// The first nonzero component, if any.
    pub fn leading(&self) -> Option<F5> {
        self.0.iter().copied().find(|c| !c.is_zero())
    }

    pub fn scale(&self, k: F5) -> Self {
        Ket(self.0.map(|c| c * k))
    }

    pub fn canonicalize(&self) -> Result<State<N>> {
        State::new(*self)
    }
}

impl<const N: usize> Bra<N> {
    pub fn new(values: [i32; N]) -> Self {
        Bra(components(values))
    }

    pub fn components(&self) -> &[F5; N] {
        &self.0
    }

    pub fn scale(&self, k: F5) -> Self {
        Bra(self.0.map(|c| c * k))
    }

    /// ⟨self|v⟩.
    pub fn pair(&self, v: &Ket<N>) -> F5 {
        pairing(self, v)
    }
}

/// The dual pairing ⟨x|v⟩ = Σ xᵢvᵢ.
pub fn pairing<const N: usize>(x: &Bra<N>, v: &Ket<N>) -> F5 {
    x.0.iter().zip(v.0.iter()).map(|(a, b)| *a * *b).sum()
}

/// Pairing on runtime-length component slices, for parsed input of unknown dimension.
pub fn pairing_slices(x: &[F5], v: &[F5]) -> Result<F5> {
    if x.len() != v.len() {
        return Err(Error::Dimension { expected: x.len(), found: v.len() });
    }
    Ok(x.iter().zip(v).map(|(a, b)| *a * *b).sum())
}

impl<const N: usize> Add for Ket<N> {
    type Output = Ket<N>;
    fn add(self, rhs: Ket<N>) -> Ket<N> {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o += r;
        }
        Ket(out)
    }
}

impl<const N: usize> Sub for Ket<N> {
    type Output = Ket<N>;
    fn sub(self, rhs: Ket<N>) -> Ket<N> {
        self + (-rhs)
    }
}

impl<const N: usize> Neg for Ket<N> {
    type Output = Ket<N>;
    fn neg(self) -> Ket<N> {
        self.scale(F5::MINUS_ONE)
    }
}

impl<const N: usize> Mul<Ket<N>> for F5 {
    type Output = Ket<N>;
    fn mul(self, rhs: Ket<N>) -> Ket<N> {
        rhs.scale(self)
    }
}

impl<const N: usize> Index<usize> for Ket<N> {
    type Output = F5;
    fn index(&self, i: usize) -> &F5 {
        &self.0[i]
    }
}

impl<const N: usize> State<N> {
    /// Scales `v` so that its first nonzero component is `1`.
    pub fn new(v: Ket<N>) -> Result<Self> {
        let lead = v.leading().ok_or(Error::ZeroVector)?;
        Ok(State(v.scale(lead.inv()?)))
    }

    pub fn ket(&self) -> &Ket<N> {
        &self.0
    }

    /// The scalar `k` with `v = k · representative`, if `v` lies in this class.
    pub fn scalar_of(&self, v: &Ket<N>) -> Option<F5> {
        let k = v.leading()?;
        (self.0.scale(k) == *v).then_some(k)
    }
}

/// Every projective class of dimension `N`, each once, in lexicographic order
/// of canonical representatives (`-2 < -1 < 0 < 1 < 2` per component).
///
/// Only dimensions 2 and 4 are meaningful for this crate.
pub fn enumerate_states<const N: usize>() -> Vec<State<N>> {
    let total = 5usize.pow(N as u32);
    (0..total)
        .filter_map(|mut index| {
            let mut c = [F5::ZERO; N];
            for slot in c.iter_mut().rev() {
                *slot = F5::ALL[index % 5];
                index /= 5;
            }
            let v = Ket(c);
            (v.leading() == Some(F5::ONE)).then_some(State(v))
        })
        .collect()
}

/// |u⟩ ⊗ |v⟩ with subsystem 1 as the major index.
pub fn tensor(u: &Ket<2>, v: &Ket<2>) -> Ket<4> {
    Ket([u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]])
}

pub fn tensor_bra(x: &Bra<2>, y: &Bra<2>) -> Bra<4> {
    let (x, y) = (x.0, y.0);
    Bra([x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1]])
}

/// Tensor product of two projective classes, canonicalized.
pub fn tensor_states(u: &SingleState, v: &SingleState) -> PairState {
    // Leading-one times leading-one is leading-one, so no rescaling is needed.
    State(tensor(u.ket(), v.ket()))
}

/// Returns the factors when the 2×2 reshaping of `s` has zero determinant.
pub fn is_product(s: &PairState) -> Option<(SingleState, SingleState)> {
    let m = s.ket();
    if m[0] * m[3] - m[1] * m[2] != F5::ZERO {
        return None;
    }
    // Rows are multiples of the second factor, columns of the first.
    let row = if m[0].is_zero() && m[1].is_zero() { 2 } else { 0 };
    let second = Ket([m[row], m[row + 1]]);
    let col = if m[0].is_zero() && m[2].is_zero() { 1 } else { 0 };
    let first = Ket([m[col], m[col + 2]]);
    Some((State::new(first).ok()?, State::new(second).ok()?))
}

/// The bra annihilating `partner`, scaled so that it pairs to `1` with `s`.
pub fn dual(s: &SingleState, partner: &SingleState) -> Result<Bra<2>> {
    let p = partner.ket();
    let raw = Bra([p[1], -p[0]]);
    let norm = pairing(&raw, s.ket());
    if norm.is_zero() {
        return Err(Error::DegenerateDual);
    }
    Ok(raw.scale(norm.inv()?))
}

/// The unique projective class annihilated by `x`.
pub fn kernel(x: &Bra<2>) -> Result<SingleState> {
    let [p, q] = x.0;
    State::new(Ket([-q, p]))
}

/// The six named single-system states `a`..`f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Named {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Named {
    pub const ALL: [Named; 6] = [Named::A, Named::B, Named::C, Named::D, Named::E, Named::F];

    pub fn letter(self) -> char {
        match self {
            Named::A => 'a',
            Named::B => 'b',
            Named::C => 'c',
            Named::D => 'd',
            Named::E => 'e',
            Named::F => 'f',
        }
    }

    pub fn from_letter(c: char) -> Option<Named> {
        Named::ALL.into_iter().find(|n| n.letter() == c)
    }

    pub fn ket(self) -> Ket<2> {
        match self {
            Named::A => Ket::new([1, 0]),
            Named::B => Ket::new([0, 1]),
            Named::C => Ket::new([1, 1]),
            Named::D => Ket::new([1, -1]),
            Named::E => Ket::new([1, 2]),
            Named::F => Ket::new([1, -2]),
        }
    }

    pub fn state(self) -> SingleState {
        // Every named ket already has a leading one.
        State(self.ket())
    }

    /// The other member of this state's observable pair.
    pub fn partner(self) -> Named {
        match self {
            Named::A => Named::B,
            Named::B => Named::A,
            Named::C => Named::D,
            Named::D => Named::C,
            Named::E => Named::F,
            Named::F => Named::E,
        }
    }

    /// Derived from the ket and its partner via [`dual`].
    pub fn bra(self) -> Bra<2> {
        dual(&self.state(), &self.partner().state()).expect("named partners are distinct")
    }

    pub fn of_state(s: &SingleState) -> Option<Named> {
        Named::ALL.into_iter().find(|n| n.state() == *s)
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl SingleState {
    pub fn named(&self) -> Option<Named> {
        Named::of_state(self)
    }
}

impl PairState {
    /// `"a*c"` for products of named states.
    pub fn factored(&self) -> Option<String> {
        let (u, v) = is_product(self)?;
        Some(format!("{}*{}", u.named()?, v.named()?))
    }
}

fn write_components(f: &mut fmt::Formatter<'_>, c: &[F5]) -> fmt::Result {
    write!(f, "[")?;
    for (i, x) in c.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

impl<const N: usize> fmt::Display for Ket<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.0)
    }
}

impl<const N: usize> fmt::Debug for Ket<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.0)
    }
}

impl<const N: usize> fmt::Display for Bra<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.0)
    }
}

impl<const N: usize> fmt::Debug for Bra<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bra")?;
        write_components(f, &self.0)
    }
}

impl<const N: usize> fmt::Display for State<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.0 .0)
    }
}

impl<const N: usize> fmt::Debug for State<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.0 .0)
    }
}

impl<const N: usize> Serialize for State<N> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses `"[1,-2]"`-style component lists.
pub fn parse_components(s: &str) -> Result<Vec<F5>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed vector, got {s:?}")))?;
    inner.split(',').map(str::parse).collect()
}

fn parse_fixed<const N: usize>(s: &str) -> Result<[F5; N]> {
    let s = s.trim();
    if N == 2 {
        if let Some(n) = single_letter(s).and_then(Named::from_letter) {
            return Ok(std::array::from_fn(|i| n.ket()[i]));
        }
    }
    if N == 4 {
        if let Some((l, r)) = s.split_once('*') {
            let (l, r) = (
                single_letter(l.trim()).and_then(Named::from_letter),
                single_letter(r.trim()).and_then(Named::from_letter),
            );
            if let (Some(l), Some(r)) = (l, r) {
                let t = tensor(&l.ket(), &r.ket());
                return Ok(std::array::from_fn(|i| t[i]));
            }
        }
    }
    let c = parse_components(s)?;
    c.as_slice()
        .try_into()
        .map_err(|_| Error::Dimension { expected: N, found: c.len() })
}

fn single_letter(s: &str) -> Option<char> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

/// Accepts `"[1,0]"`, named letters `"a"`..`"f"` (dimension 2) and `"a*c"` (dimension 4).
impl<const N: usize> FromStr for Ket<N> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_fixed(s).map(Ket)
    }
}

impl<const N: usize> FromStr for Bra<N> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if N == 2 {
            if let Some(n) = single_letter(s).and_then(Named::from_letter) {
                let b = n.bra();
                return Ok(Bra(std::array::from_fn(|i| b.0[i])));
            }
        }
        parse_fixed::<N>(s).map(Bra)
    }
}

impl<const N: usize> FromStr for State<N> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Ket<N>>()?.canonicalize()
    }
}
