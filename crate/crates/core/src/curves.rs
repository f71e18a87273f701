//! Multicurves in the punctured disk: round systems and Dynnikov coordinates.

use crate::braid::BraidWord;
use crate::config::Limits;
use crate::error::{BraidError, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;

/// Closed puncture interval `[lo, hi]` (1-based).
pub type Interval = (usize, usize);

fn nested_or_disjoint(a: Interval, b: Interval) -> bool {
    a.1 < b.0 || b.1 < a.0 || (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1)
}

/// A family of round curves, each enclosing an interval of punctures.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoundMulticurve {
    n: usize,
    intervals: Vec<Interval>,
}

impl RoundMulticurve {
    /// A laminar family of essential intervals.
    pub fn new(n: usize, intervals: Vec<Interval>) -> Result<Self> {
        let c = Self::new_with_singletons(n, intervals)?;
        if c.intervals.iter().any(|&(a, b)| b == a || b - a + 1 >= n) {
            return Err(BraidError::NotApplicable("interval is not essential".into()));
        }
        Ok(c)
    }

    /// A laminar family where singleton intervals are allowed (R(β)-mode bookkeeping).
    pub fn new_with_singletons(n: usize, mut intervals: Vec<Interval>) -> Result<Self> {
        intervals.sort_unstable();
        intervals.dedup();
        for &(a, b) in &intervals {
            if a == 0 || a > b || b > n {
                return Err(BraidError::IndexOutOfRange(format!("interval [{a},{b}] in B{n}")));
            }
        }
        for i in 0..intervals.len() {
            for j in i + 1..intervals.len() {
                if !nested_or_disjoint(intervals[i], intervals[j]) {
                    return Err(BraidError::NotLaminar);
                }
            }
        }
        Ok(RoundMulticurve { n, intervals })
    }

    pub fn empty(n: usize) -> Self {
        RoundMulticurve { n, intervals: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn essential(&self) -> RoundMulticurve {
        let iv = self.intervals.iter().copied().filter(|&(a, b)| b > a && b - a + 1 < self.n).collect();
        RoundMulticurve { n: self.n, intervals: iv }
    }

    /// Intervals not contained in another interval of the family.
    pub fn outermost(&self) -> RoundMulticurve {
        let iv = self
            .intervals
            .iter()
            .copied()
            .filter(|&x| !self.intervals.iter().any(|&y| y != x && y.0 <= x.0 && x.1 <= y.1))
            .collect();
        RoundMulticurve { n: self.n, intervals: iv }
    }

    /// Outermost intervals completed by singletons so that every puncture is covered.
    pub fn tube_partition(&self) -> Vec<Interval> {
        let outer = self.outermost();
        let mut out = Vec::new();
        let mut p = 1;
        for &(a, b) in &outer.intervals {
            while p < a {
                out.push((p, p));
                p += 1;
            }
            out.push((a, b));
            p = b + 1;
        }
        while p <= self.n {
            out.push((p, p));
            p += 1;
        }
        out
    }

    /// Parses `{[1,3],[4,5]}` for `n` punctures.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let body = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or(BraidError::Parse { pos: 1, msg: "expected `{...}`".into() })?;
        let mut intervals = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let close = rest.find(']').ok_or(BraidError::Parse { pos: 1, msg: "unclosed `[`".into() })?;
            let inner = rest[..close].trim_start_matches(',').trim_start_matches('[');
            let mut parts = inner.split(',');
            let mut num = || -> Result<usize> {
                parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or(BraidError::Parse { pos: 1, msg: format!("bad interval `{inner}`") })
            };
            let (a, b) = (num()?, num()?);
            intervals.push((a, b));
            rest = rest[close + 1..].trim_start_matches(',');
        }
        Self::new(n, intervals)
    }
}

impl fmt::Display for RoundMulticurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{a},{b}]")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for RoundMulticurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{} {}", self.n, self)
    }
}

impl Serialize for RoundMulticurve {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<[usize; 2]> = self.intervals.iter().map(|&(a, b)| [a, b]).collect();
        v.serialize(s)
    }
}

/// Dynnikov coordinates `(a_1..a_{n-2}, b_1..b_{n-2})` of a multicurve.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaminationCoords {
    n: usize,
    coords: Vec<BigInt>,
}

impl LaminationCoords {
    pub fn zero(n: usize) -> Self {
        LaminationCoords { n, coords: vec![BigInt::zero(); 2 * n.saturating_sub(2)] }
    }

    pub fn from_ints(n: usize, v: &[i64]) -> Result<Self> {
        if v.len() != 2 * n.saturating_sub(2) {
            return Err(BraidError::SizeMismatch(format!("expected {} coordinates", 2 * n.saturating_sub(2))));
        }
        Ok(LaminationCoords { n, coords: v.iter().map(|&x| BigInt::from(x)).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn add_assign(&mut self, other: &LaminationCoords) {
        for (x, y) in self.coords.iter_mut().zip(&other.coords) {
            *x += y;
        }
    }
}

impl Serialize for LaminationCoords {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

fn encode_interval(n: usize, (p, q): Interval, b: &mut [i64]) {
    if p >= 2 {
        b[p - 2] -= 1;
    }
    if q < n {
        b[q - 2] += 1;
    }
}

/// Coordinates of a round multicurve (sum over its disjoint components).
pub fn encode_round(c: &RoundMulticurve) -> Result<LaminationCoords> {
    let n = c.n;
    let ess = c.essential();
    if ess.intervals.len() != c.intervals.len() {
        return Err(BraidError::NotApplicable("only essential intervals can be encoded".into()));
    }
    let m = n.saturating_sub(2);
    let mut b = vec![0i64; m];
    for &iv in &c.intervals {
        encode_interval(n, iv, &mut b);
    }
    let mut v = vec![0i64; m];
    v.extend(b);
    LaminationCoords::from_ints(n, &v)
}

fn encode_one(n: usize, iv: Interval) -> LaminationCoords {
    let m = n - 2;
    let mut v = vec![0i64; 2 * m];
    encode_interval(n, iv, &mut v[m..]);
    LaminationCoords::from_ints(n, &v).expect("length matches")
}

/// Arithmetic needed by the piecewise-linear update rules.
trait Coord: Clone {
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn pos_part(&self) -> Self;
    fn neg_part(&self) -> Self;
}

impl Coord for i64 {
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn pos_part(&self) -> Self {
        (*self).max(0)
    }
    fn neg_part(&self) -> Self {
        (*self).min(0)
    }
}

impl Coord for BigInt {
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn pos_part(&self) -> Self {
        if self.is_positive() { self.clone() } else { BigInt::zero() }
    }
    fn neg_part(&self) -> Self {
        if self.is_negative() { self.clone() } else { BigInt::zero() }
    }
}

/// Applies the letters in order; `None` on overflow.
fn apply_letters<T: Coord>(n: usize, letters: &[i32], a: &mut [T], b: &mut [T]) -> Option<()> {
    for &e in letters {
        let i = e.unsigned_abs() as usize;
        if i == 1 && n == 2 {
            continue;
        }
        if i == 1 {
            let (x, y) = (a[0].clone(), b[0].clone());
            let (na, nb) = if e > 0 {
                // a' = b + (a - b⁺)⁻,  b' = -a + b⁺
                (y.add(&x.sub(&y.pos_part())?.neg_part())?, x.neg()?.add(&y.pos_part())?)
            } else {
                // a' = -b + (a + b⁺)⁺,  b' = a + b⁺
                (y.neg()?.add(&x.add(&y.pos_part())?.pos_part())?, x.add(&y.pos_part())?)
            };
            a[0] = na;
            b[0] = nb;
        } else if i == n - 1 {
            let k = n - 3;
            let (x, y) = (a[k].clone(), b[k].clone());
            let (na, nb) = if e > 0 {
                // a' = b + (a - b⁻)⁺,  b' = -a + b⁻
                (y.add(&x.sub(&y.neg_part())?.pos_part())?, x.neg()?.add(&y.neg_part())?)
            } else {
                // a' = -b + (a + b⁻)⁻,  b' = a + b⁻
                (y.neg()?.add(&x.add(&y.neg_part())?.neg_part())?, x.add(&y.neg_part())?)
            };
            a[k] = na;
            b[k] = nb;
        } else {
            let (l, r) = (i - 2, i - 1);
            let (a1, b1, a2, b2) = (a[l].clone(), b[l].clone(), a[r].clone(), b[r].clone());
            if e > 0 {
                // c = a1 - a2 + b2⁺ - b1⁻
                let c = a1.sub(&a2)?.add(&b2.pos_part())?.sub(&b1.neg_part())?;
                a[l] = a1.add(&b1.pos_part())?.add(&b2.pos_part().sub(&c)?.pos_part())?;
                b[l] = b2.sub(&c.pos_part())?;
                a[r] = a2.add(&b2.neg_part())?.add(&b1.neg_part().add(&c)?.neg_part())?;
                b[r] = b1.add(&c.pos_part())?;
            } else {
                // d = a1 - a2 - b2⁺ + b1⁻
                let d = a1.sub(&a2)?.sub(&b2.pos_part())?.add(&b1.neg_part())?;
                a[l] = a1.sub(&b1.pos_part())?.sub(&b2.pos_part().add(&d)?.pos_part())?;
                b[l] = b2.add(&d.neg_part())?;
                a[r] = a2.sub(&b2.neg_part())?.sub(&b1.neg_part().sub(&d)?.neg_part())?;
                b[r] = b1.sub(&d.neg_part())?;
            }
        }
    }
    Some(())
}

/// Image of a multicurve under `w`; letters act in order, so `act(uv, x) = act(v, act(u, x))`.
pub fn act(w: &BraidWord, x: &LaminationCoords) -> Result<LaminationCoords> {
    if w.n() != x.n {
        return Err(BraidError::StrandMismatch(w.n(), x.n));
    }
    let n = x.n;
    if n <= 2 {
        return Ok(x.clone());
    }
    let m = n - 2;
    let small: Option<Vec<i64>> = x.coords.iter().map(ToPrimitive::to_i64).collect();
    if let Some(v) = small {
        let (mut a, mut b) = (v[..m].to_vec(), v[m..].to_vec());
        if apply_letters(n, w.letters(), &mut a, &mut b).is_some() {
            a.extend(b);
            return LaminationCoords::from_ints(n, &a);
        }
    }
    let (mut a, mut b) = (x.coords[..m].to_vec(), x.coords[m..].to_vec());
    apply_letters(n, w.letters(), &mut a, &mut b).expect("big integers never overflow");
    a.extend(b);
    Ok(LaminationCoords { n, coords: a })
}

/// Whether `w` maps the multicurve `c` to itself (components may be permuted).
pub fn is_invariant(w: &BraidWord, c: &RoundMulticurve) -> Result<bool> {
    let e = encode_round(c)?;
    Ok(act(w, &e)? == e)
}

/// All essential intervals of `B_n` in lexicographic order.
pub fn essential_intervals(n: usize) -> Vec<Interval> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if b - a + 1 < n {
                out.push((a, b));
            }
        }
    }
    out
}

/// For each essential interval, the interval its curve is sent to by `w`, if that image is round.
pub fn round_images(w: &BraidWord) -> Result<Vec<(Interval, Option<Interval>)>> {
    let n = w.n();
    if n < 3 {
        return Ok(Vec::new());
    }
    let cat = essential_intervals(n);
    let lookup: HashMap<LaminationCoords, Interval> = cat.iter().map(|&iv| (encode_one(n, iv), iv)).collect();
    cat.iter().map(|&iv| Ok((iv, lookup.get(&act(w, &encode_one(n, iv))?).copied()))).collect()
}

/// Orbits of round curves all of whose images under `w` are round, each as a sorted
/// interval list; only orbits that are themselves laminar are returned.
pub fn round_orbits(w: &BraidWord) -> Result<Vec<Vec<Interval>>> {
    let images: HashMap<Interval, Option<Interval>> = round_images(w)?.into_iter().collect();
    let mut orbits: Vec<Vec<Interval>> = Vec::new();
    let mut done = std::collections::HashSet::new();
    for iv in essential_intervals(w.n()) {
        if done.contains(&iv) {
            continue;
        }
        let mut orbit = vec![iv];
        let mut cur = iv;
        let closed = loop {
            match images.get(&cur).copied().flatten() {
                Some(next) if next == iv => break true,
                Some(next) if orbit.contains(&next) => break false,
                Some(next) => {
                    orbit.push(next);
                    cur = next;
                }
                None => break false,
            }
        };
        if closed {
            done.extend(orbit.iter().copied());
            orbit.sort_unstable();
            let laminar = orbit.iter().enumerate().all(|(i, &x)| orbit[i + 1..].iter().all(|&y| nested_or_disjoint(x, y)));
            if laminar {
                orbits.push(orbit);
            }
        }
    }
    orbits.sort();
    Ok(orbits)
}

fn compatible(a: &[Interval], b: &[Interval]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| nested_or_disjoint(x, y)))
}

/// Every nonempty laminar family of essential intervals invariant under `w`, sorted.
pub fn invariant_round_systems(w: &BraidWord, limits: &Limits) -> Result<Vec<RoundMulticurve>> {
    let n = w.n();
    if n > limits.enum_limit {
        return Err(BraidError::TooManySystems(limits.enum_limit));
    }
    let orbits = round_orbits(w)?;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        orbits: &[Vec<Interval>],
        start: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<Interval>>,
        cap: usize,
    ) -> Result<()> {
        for i in start..orbits.len() {
            if chosen.iter().all(|&j| compatible(&orbits[i], &orbits[j])) {
                chosen.push(i);
                out.push(chosen.iter().flat_map(|&j| orbits[j].iter().copied()).collect());
                if out.len() > cap {
                    return Err(BraidError::TooManySystems(cap));
                }
                rec(orbits, i + 1, chosen, out, cap)?;
                chosen.pop();
            }
        }
        Ok(())
    }
    rec(&orbits, 0, &mut chosen, &mut out, limits.budget)?;
    let mut systems: Vec<RoundMulticurve> =
        out.into_iter().map(|iv| RoundMulticurve::new(n, iv)).collect::<Result<_>>()?;
    systems.sort();
    Ok(systems)
}

/// The outermost curves of an invariant round system of `w`, empty when there is none.
///
/// Invariant round curves crossing no round curve fixed by a power `w^j`, `j ≤ n`,
/// are preferred (they are candidates for the canonical reduction system); otherwise
/// a maximal compatible union of round orbits is chosen greedily in canonical order.
pub fn maximal_outer_system(w: &BraidWord) -> Result<RoundMulticurve> {
    let orbits = round_orbits(w)?;
    let powered = power_invariant_intervals(w, w.n())?;
    let clean: Vec<Interval> = orbits
        .iter()
        .flatten()
        .copied()
        .filter(|&x| powered.iter().all(|&y| nested_or_disjoint(x, y)))
        .collect();
    if !clean.is_empty() {
        return Ok(RoundMulticurve::new(w.n(), clean)?.outermost());
    }
    let mut chosen: Vec<&Vec<Interval>> = Vec::new();
    for o in &orbits {
        if chosen.iter().all(|c| compatible(o, c)) {
            chosen.push(o);
        }
    }
    let all: Vec<Interval> = chosen.into_iter().flatten().copied().collect();
    Ok(RoundMulticurve::new(w.n(), all)?.outermost())
}

/// Essential intervals whose curve is fixed by `w^j` for some `1 ≤ j ≤ max_power`.
pub fn power_invariant_intervals(w: &BraidWord, max_power: usize) -> Result<Vec<Interval>> {
    let n = w.n();
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for iv in essential_intervals(n) {
        let e = encode_one(n, iv);
        let mut x = e.clone();
        for _ in 0..max_power {
            x = act(w, &x)?;
            if x == e {
                out.push(iv);
                break;
            }
        }
    }
    Ok(out)
}

/// Coordinates of the single curve around an essential interval.
pub fn encode_interval_curve(n: usize, iv: Interval) -> Result<LaminationCoords> {
    encode_round(&RoundMulticurve::new(n, vec![iv])?)
}

impl LaminationCoords {
    /// Sum of coordinates of disjoint multicurves.
    pub fn disjoint_union(&self, other: &LaminationCoords) -> LaminationCoords {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{delta_word, small_delta_word};

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn rc(n: usize, iv: &[Interval]) -> RoundMulticurve {
        RoundMulticurve::new(n, iv.to_vec()).unwrap()
    }

    #[test]
    fn encoding_examples() {
        assert!(encode_round(&RoundMulticurve::empty(4)).unwrap().is_zero());
        let a = encode_round(&rc(3, &[(1, 2)])).unwrap();
        let b = encode_round(&rc(3, &[(2, 3)])).unwrap();
        assert!(!a.is_zero() && !b.is_zero() && a != b);
        let u = encode_round(&rc(4, &[(1, 2), (3, 4)])).unwrap();
        let s = encode_round(&rc(4, &[(1, 2)])).unwrap().disjoint_union(&encode_round(&rc(4, &[(3, 4)])).unwrap());
        assert_eq!(u, s);
        assert_eq!(RoundMulticurve::new(4, vec![(1, 3), (2, 4)]), Err(BraidError::NotLaminar));
    }

    #[test]
    fn action_examples() {
        let c = encode_round(&rc(3, &[(1, 2)])).unwrap();
        assert_eq!(act(&w(3, &[1]), &c).unwrap(), c);
        let moved = act(&w(3, &[2]), &c).unwrap();
        assert_ne!(moved, c);
        assert_eq!(act(&w(3, &[-2]), &moved).unwrap(), c);
        let x = LaminationCoords::from_ints(5, &[3, -2, 7, 1, -4, 2]).unwrap();
        assert_eq!(act(&delta_word(5).unwrap().pow(2), &x).unwrap(), x);
    }

    #[test]
    fn invariance_examples() {
        assert!(is_invariant(&w(4, &[1, 3, 3]), &rc(4, &[(1, 2), (3, 4)])).unwrap());
        assert!(!is_invariant(&w(3, &[2]), &rc(3, &[(1, 2)])).unwrap());
        assert!(is_invariant(&w(3, &[2, -1]), &RoundMulticurve::empty(3)).unwrap());
    }

    #[test]
    fn system_enumeration_examples() {
        let lim = Limits::default();
        assert!(invariant_round_systems(&small_delta_word(3).unwrap(), &lim).unwrap().is_empty());
        let sys = invariant_round_systems(&w(4, &[1, 3, 3]), &lim).unwrap();
        for want in [vec![(1, 2), (3, 4)], vec![(1, 2)], vec![(3, 4)]] {
            assert!(sys.contains(&rc(4, &want)), "{want:?} missing from {sys:?}");
        }
        let b5 = BraidWord::parse("B5: 3 4 2 3 1 2 2 3 4 1 2 3").unwrap();
        let sys = invariant_round_systems(&b5, &lim).unwrap();
        assert!(sys.contains(&rc(5, &[(1, 3), (4, 5)])));
        assert_eq!(maximal_outer_system(&w(4, &[1, 3, 3])).unwrap(), rc(4, &[(1, 2), (3, 4)]));
        // [1,3] is invariant but crosses the invariant [2,5]
        assert_eq!(maximal_outer_system(&w(5, &[2, 4, 4])).unwrap(), rc(5, &[(2, 3), (4, 5)]));
    }

    #[test]
    fn big_coordinates_do_not_overflow() {
        let x = encode_round(&rc(4, &[(2, 3)])).unwrap();
        let pa = w(4, &[1, -2, 3, 1, -2, 3]).pow(40);
        let y = act(&pa, &x).unwrap();
        assert!(y.coords().iter().any(|c| c.to_i64().is_none()));
        assert_eq!(act(&pa.invert(), &y).unwrap(), x);
    }

    #[test]
    fn parse_display() {
        let c = RoundMulticurve::parse(5, "{[1,3],[4,5]}").unwrap();
        assert_eq!(c, rc(5, &[(1, 3), (4, 5)]));
        assert_eq!(c.to_string(), "{[1,3],[4,5]}");
        assert_eq!(RoundMulticurve::parse(5, "{}").unwrap(), RoundMulticurve::empty(5));
        assert_eq!(rc(6, &[(2, 3), (2, 5)]).tube_partition(), vec![(1, 1), (2, 5), (6, 6)]);
    }
}
