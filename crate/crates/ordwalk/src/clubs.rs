//! Clubs and higher C-sequences.
//!
//! A [`Club`] is a lazily enumerated closed set of ordinals with access by
//! index. A [`CSeq`] assigns clubs to C-indices, i.e. tuples `(a_0, .., a_{m-1})`
//! with `a_i` in the club of `(a_{i+1}, .., a_{m-1})`, up to length `order`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ordinal::{Kind, Ordinal};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Club {
    Empty,
    /// Strictly increasing, nonempty.
    Finite(Arc<Vec<Ordinal>>),
    /// The canonical fundamental sequence of a limit ordinal.
    Ladder(Ordinal),
    /// The interval `[0, alpha)` for `alpha > 0`.
    Full(Ordinal),
    /// Every ordinal of the notation system.
    All,
}

impl Club {
    pub fn finite(mut members: Vec<Ordinal>) -> Club {
        members.sort();
        members.dedup();
        if members.is_empty() {
            Club::Empty
        } else {
            Club::Finite(Arc::new(members))
        }
    }

    pub fn singleton(x: Ordinal) -> Club {
        Club::Finite(Arc::new(vec![x]))
    }

    pub fn full(alpha: Ordinal) -> Club {
        if alpha.is_zero() {
            Club::Empty
        } else {
            Club::Full(alpha)
        }
    }

    /// Ladder on a limit ordinal; `None` otherwise.
    pub fn ladder(lambda: Ordinal) -> Option<Club> {
        lambda.is_limit().then_some(Club::Ladder(lambda))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Club::Empty)
    }

    /// Order type, or `None` for [`Club::All`].
    pub fn order_type(&self) -> Option<Ordinal> {
        match self {
            Club::Empty => Some(Ordinal::zero()),
            Club::Finite(v) => Some(Ordinal::nat(v.len() as u64)),
            Club::Ladder(_) => Some(Ordinal::omega()),
            Club::Full(a) => Some(a.clone()),
            Club::All => None,
        }
    }

    /// Supremum of the whole club, or `None` for [`Club::All`].
    pub fn sup(&self) -> Option<Ordinal> {
        match self {
            Club::Empty => Some(Ordinal::zero()),
            Club::Finite(v) => v.last().cloned(),
            Club::Ladder(l) => Some(l.clone()),
            Club::Full(a) => Some(sup_of_interval(a)),
            Club::All => None,
        }
    }

    pub fn element_at(&self, idx: &Ordinal) -> Option<Ordinal> {
        match self {
            Club::Empty => None,
            Club::Finite(v) => idx.as_u64().and_then(|i| v.get(i as usize).cloned()),
            Club::Ladder(l) => idx.as_biguint().and_then(|k| l.fundamental(&k)),
            Club::Full(a) => (idx < a).then(|| idx.clone()),
            Club::All => Some(idx.clone()),
        }
    }

    pub fn index_of(&self, x: &Ordinal) -> Option<Ordinal> {
        match self {
            Club::Empty => None,
            Club::Finite(v) => v.binary_search(x).ok().map(|i| Ordinal::nat(i as u64)),
            Club::Ladder(l) => {
                let k = l.fundamental_ceil(x)?;
                (l.fundamental(&k).as_ref() == Some(x)).then(|| Ordinal::from_biguint(k))
            }
            Club::Full(a) => (x < a).then(|| x.clone()),
            Club::All => Some(x.clone()),
        }
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        self.index_of(x).is_some()
    }

    /// Least member `>= xi` together with its index.
    pub fn min_above_indexed(&self, xi: &Ordinal) -> Option<(Ordinal, Ordinal)> {
        match self {
            Club::Empty => None,
            Club::Finite(v) => {
                let i = v.partition_point(|m| m < xi);
                v.get(i).map(|m| (Ordinal::nat(i as u64), m.clone()))
            }
            Club::Ladder(l) => {
                let k = l.fundamental_ceil(xi)?;
                let m = l.fundamental(&k)?;
                Some((Ordinal::from_biguint(k), m))
            }
            Club::Full(a) => (xi < a).then(|| (xi.clone(), xi.clone())),
            Club::All => Some((xi.clone(), xi.clone())),
        }
    }

    /// Least member `>= xi`.
    pub fn min_above(&self, xi: &Ordinal) -> Option<Ordinal> {
        self.min_above_indexed(xi).map(|(_, m)| m)
    }

    /// Order type of the members below `xi`.
    pub fn count_below(&self, xi: &Ordinal) -> Ordinal {
        match self {
            Club::Empty => Ordinal::zero(),
            Club::Finite(v) => Ordinal::nat(v.partition_point(|m| m < xi) as u64),
            Club::Ladder(l) => match l.fundamental_ceil(xi) {
                Some(k) => Ordinal::from_biguint(k),
                None => Ordinal::omega(),
            },
            Club::Full(a) => a.min(xi).clone(),
            Club::All => xi.clone(),
        }
    }

    /// Supremum of the members below `xi`, with `sup {} = 0`.
    pub fn sup_below(&self, xi: &Ordinal) -> Ordinal {
        match self {
            Club::Empty => Ordinal::zero(),
            Club::Finite(v) => {
                let i = v.partition_point(|m| m < xi);
                if i == 0 {
                    Ordinal::zero()
                } else {
                    v[i - 1].clone()
                }
            }
            Club::Ladder(l) => match l.fundamental_ceil(xi) {
                Some(k) if k == BigUint::from(0u32) => Ordinal::zero(),
                Some(k) => l.fundamental(&(k - 1u32)).expect("ladder member"),
                None => l.clone(),
            },
            Club::Full(a) => sup_of_interval(a.min(xi)),
            Club::All => sup_of_interval(xi),
        }
    }

    /// Greatest member below `xi`, when the members below `xi` have a maximum.
    pub fn max_below(&self, xi: &Ordinal) -> Option<Ordinal> {
        match self {
            Club::Empty => None,
            Club::Finite(v) => {
                let i = v.partition_point(|m| m < xi);
                (i > 0).then(|| v[i - 1].clone())
            }
            Club::Ladder(l) => {
                let k = l.fundamental_ceil(xi)?;
                (k > BigUint::from(0u32)).then(|| l.fundamental(&(k - 1u32)).expect("ladder member"))
            }
            Club::Full(a) => a.min(xi).pred(),
            Club::All => xi.pred(),
        }
    }

    /// Whether `alpha` is a limit of members of the club.
    pub fn is_accumulation(&self, alpha: &Ordinal) -> bool {
        alpha.is_limit() && self.sup_below(alpha) == *alpha
    }

    /// The club intersected with `alpha`.
    pub fn restrict_below(&self, alpha: &Ordinal) -> Club {
        match self {
            Club::Empty => Club::Empty,
            Club::Finite(v) => Club::finite(v.iter().filter(|m| *m < alpha).cloned().collect()),
            Club::Ladder(l) => match l.fundamental_ceil(alpha) {
                None => self.clone(),
                Some(k) => {
                    let k = k.to_u64().expect("small ladder index");
                    Club::finite((0..k).filter_map(|i| l.fundamental_sequence(i)).collect())
                }
            },
            Club::Full(a) => Club::full(a.min(alpha).clone()),
            Club::All => Club::full(alpha.clone()),
        }
    }

    /// All members, when the club is finite.
    pub fn finite_members(&self) -> Option<Vec<Ordinal>> {
        match self {
            Club::Empty => Some(Vec::new()),
            Club::Finite(v) => Some(v.to_vec()),
            Club::Full(a) => a.as_u64().map(|k| (0..k).map(Ordinal::nat).collect()),
            Club::Ladder(_) | Club::All => None,
        }
    }

    /// Set equality, independent of representation.
    pub fn same_set(&self, other: &Club) -> bool {
        if self == other {
            return true;
        }
        match (self.finite_members(), other.finite_members()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// The first `limit` members.
    pub fn prefix(&self, limit: usize) -> Vec<Ordinal> {
        let mut out = Vec::new();
        let mut i = 0u64;
        while out.len() < limit {
            match self.element_at(&Ordinal::nat(i)) {
                Some(m) => out.push(m),
                None => break,
            }
            i += 1;
        }
        out
    }

    /// Image of `inner` (a set of indices) under the enumeration of `self`.
    pub fn image(&self, inner: &Club) -> Result<Club> {
        if matches!(self, Club::Full(_) | Club::All) || inner.is_empty() {
            return Ok(inner.clone());
        }
        let members = inner.finite_members().ok_or_else(|| {
            Error::OutOfScope(format!("image of the infinite club {inner} under {self}"))
        })?;
        let mapped: Option<Vec<Ordinal>> = members.iter().map(|i| self.element_at(i)).collect();
        mapped
            .map(Club::finite)
            .ok_or_else(|| Error::Precondition(format!("{inner} exceeds the order type of {self}")))
    }
}

fn sup_of_interval(a: &Ordinal) -> Ordinal {
    match a.kind() {
        Kind::Zero => Ordinal::zero(),
        Kind::Successor(p) => p,
        Kind::Limit => a.clone(),
    }
}

impl fmt::Display for Club {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Ordinal]| v.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Club::Empty => f.write_str("{}"),
            Club::Finite(v) => write!(f, "{{{}}}", join(v)),
            Club::Ladder(_) => write!(f, "{{{},...}}", join(&self.prefix(3))),
            Club::Full(a) => write!(f, "[0,{a})"),
            Club::All => f.write_str("On"),
        }
    }
}

impl fmt::Debug for Club {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// User-supplied club rule for [`CSeq::custom`].
pub type Resolver = Arc<dyn Fn(&CSeq, &[Ordinal]) -> Result<Club> + Send + Sync>;

#[derive(Clone)]
enum Rule {
    Trivial,
    Canonical,
    Compound(Arc<CSeq>),
    Square(Arc<CSeq>),
    FullAt { lambda: Ordinal, base: Arc<CSeq> },
    Custom(Resolver),
}

/// An order-`n` C-sequence on a domain (`None` means all of epsilon_0).
pub struct CSeq {
    order: usize,
    domain: Option<Ordinal>,
    rule: Rule,
    label: String,
    cache: RwLock<HashMap<Vec<Ordinal>, Club>>,
}

impl fmt::Debug for CSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CSeq")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("domain", &self.domain)
            .finish()
    }
}

impl CSeq {
    fn new(order: usize, domain: Option<Ordinal>, rule: Rule, label: String) -> CSeq {
        CSeq { order, domain, rule, label, cache: RwLock::new(HashMap::new()) }
    }

    /// Every club is the full interval: `C_(a, ..) = a`.
    pub fn trivial(domain: Option<Ordinal>, order: usize) -> CSeq {
        CSeq::new(order.max(1), domain, Rule::Trivial, "trivial".into())
    }

    /// `C_{g+1} = {g}`, `C_l` the canonical ladder, `C_0` empty.
    pub fn canonical(domain: Option<Ordinal>) -> CSeq {
        CSeq::new(1, domain, Rule::Canonical, "canonical".into())
    }

    /// Order-`n` compounding of the order-one part of `base`.
    pub fn compound(base: Arc<CSeq>, order: usize) -> CSeq {
        let label = format!("compound:{order}({})", base.label);
        CSeq::new(order.max(1), base.domain.clone(), Rule::Compound(base), label)
    }

    /// Order-`n` square-like sequence over the order-one part of `base`.
    pub fn square_like(base: Arc<CSeq>, order: usize) -> CSeq {
        let label = format!("square:{order}({})", base.label);
        CSeq::new(order.max(1), base.domain.clone(), Rule::Square(base), label)
    }

    /// Overrides `C_l = l` and `C_{a l} = C_a` for a limit `l`.
    pub fn full_at(base: Arc<CSeq>, lambda: Ordinal) -> Result<CSeq> {
        if !lambda.is_limit() {
            return Err(Error::BadArgs(format!("full_at needs a limit, got {lambda}")));
        }
        if base.domain.as_ref().is_some_and(|d| lambda >= *d) {
            return Err(Error::BadArgs(format!("{lambda} is outside the domain")));
        }
        let label = format!("full:{lambda}({})", base.label);
        Ok(CSeq::new(base.order, base.domain.clone(), Rule::FullAt { lambda, base }, label))
    }

    /// A sequence with a user-supplied rule. The rule is only called on valid
    /// C-indices of length at least one.
    pub fn custom(order: usize, domain: Option<Ordinal>, label: &str, rule: Resolver) -> CSeq {
        CSeq::new(order.max(1), domain, Rule::Custom(rule), label.into())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn domain(&self) -> Option<&Ordinal> {
        self.domain.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn in_domain(&self, x: &Ordinal) -> bool {
        self.domain.as_ref().is_none_or(|d| x < d)
    }

    /// `C_()`, the whole domain.
    pub fn whole(&self) -> Club {
        match &self.domain {
            Some(d) => Club::full(d.clone()),
            None => Club::All,
        }
    }

    /// The club at a C-index; [`Error::NotIndex`] if `idx` is not one.
    pub fn club(&self, idx: &[Ordinal]) -> Result<Club> {
        if idx.is_empty() {
            return Ok(self.whole());
        }
        if let Some(c) = self.cache.read().expect("cache lock").get(idx) {
            return Ok(c.clone());
        }
        if idx.len() > self.order || !self.in_domain(&idx[idx.len() - 1]) {
            return Err(Error::NotIndex(idx.to_vec()));
        }
        if idx.len() > 1 && !self.club(&idx[1..])?.contains(&idx[0]) {
            return Err(Error::NotIndex(idx.to_vec()));
        }
        let c = self.resolve(idx)?;
        self.cache.write().expect("cache lock").insert(idx.to_vec(), c.clone());
        Ok(c)
    }

    pub fn is_index(&self, idx: &[Ordinal]) -> Result<bool> {
        match self.club(idx) {
            Ok(_) => Ok(true),
            Err(Error::NotIndex(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// The club at `idx`, or the empty club when `idx` is not a C-index.
    pub fn club_or_empty(&self, idx: &[Ordinal]) -> Result<Club> {
        match self.club(idx) {
            Ok(c) => Ok(c),
            Err(Error::NotIndex(_)) => Ok(Club::Empty),
            Err(e) => Err(e),
        }
    }

    fn resolve(&self, idx: &[Ordinal]) -> Result<Club> {
        let m = idx.len();
        match &self.rule {
            Rule::Trivial => Ok(Club::full(idx[0].clone())),
            Rule::Canonical => Ok(canonical_club(&idx[0])),
            Rule::Compound(base) => {
                if m == 1 {
                    return base.club(idx);
                }
                let pi = self.club(&idx[m - 1..])?;
                let pre: Option<Vec<Ordinal>> = idx[..m - 1].iter().map(|a| pi.index_of(a)).collect();
                let pre = pre.ok_or_else(|| Error::NotIndex(idx.to_vec()))?;
                let inner = self.club(&pre)?;
                pi.image(&inner)
            }
            Rule::Square(base) => {
                if m == 1 {
                    return base.club(idx);
                }
                let alpha = &idx[0];
                let d = self.club(&idx[1..])?;
                if d.is_accumulation(alpha) {
                    let ca = base.club(std::slice::from_ref(alpha))?;
                    if !d.restrict_below(alpha).same_set(&ca) {
                        return Err(Error::CoherenceViolation { alpha: alpha.clone(), index: idx[1..].to_vec() });
                    }
                    Ok(ca)
                } else {
                    Ok(d.max_below(alpha).map(Club::singleton).unwrap_or(Club::Empty))
                }
            }
            Rule::FullAt { lambda, base } => {
                if idx[m - 1] == *lambda {
                    if m == 1 {
                        Ok(Club::full(lambda.clone()))
                    } else {
                        self.club(&idx[..m - 1])
                    }
                } else {
                    base.club(idx)
                }
            }
            Rule::Custom(f) => f(self, idx),
        }
    }
}

fn canonical_club(b: &Ordinal) -> Club {
    match b.kind() {
        Kind::Zero => Club::Empty,
        Kind::Successor(p) => Club::singleton(p),
        Kind::Limit => Club::Ladder(b.clone()),
    }
}

/// `C_(b) = b` at every order; see [`CSeq::trivial`].
pub fn trivial_sequence(domain: Option<Ordinal>, order: usize) -> Arc<CSeq> {
    Arc::new(CSeq::trivial(domain, order))
}

/// The canonical order-one sequence; see [`CSeq::canonical`].
pub fn canonical_sequence(domain: Option<Ordinal>) -> Arc<CSeq> {
    Arc::new(CSeq::canonical(domain))
}

pub fn compound(base: Arc<CSeq>, order: usize) -> Arc<CSeq> {
    Arc::new(CSeq::compound(base, order))
}

pub fn square_like(base: Arc<CSeq>, order: usize) -> Arc<CSeq> {
    Arc::new(CSeq::square_like(base, order))
}

pub fn full_at(base: Arc<CSeq>, lambda: Ordinal) -> Result<Arc<CSeq>> {
    CSeq::full_at(base, lambda).map(Arc::new)
}

/// Parses a selector `trivial | canonical | compound:<m> | square:<m> |
/// full:<ordinal>[,<selector>]` into a sequence able to carry order-`n` walks.
/// `canonical` is compounded up to order `n` when `n > 1`.
pub fn parse_selector(s: &str, n: usize, domain: Option<Ordinal>) -> Result<Arc<CSeq>> {
    let s = s.trim();
    let n = n.max(1);
    let level = |rest: &str| -> Result<usize> {
        let m: usize = rest.parse().map_err(|_| Error::Selector(format!("bad order in {s:?}")))?;
        if m < n {
            return Err(Error::Selector(format!("{s:?} has order {m} but order {n} is needed")));
        }
        Ok(m)
    };
    if s == "trivial" {
        return Ok(trivial_sequence(domain, n));
    }
    if s == "canonical" {
        let base = canonical_sequence(domain);
        return Ok(if n == 1 { base } else { compound(base, n) });
    }
    if let Some(rest) = s.strip_prefix("compound:") {
        return Ok(compound(canonical_sequence(domain), level(rest)?));
    }
    if let Some(rest) = s.strip_prefix("square:") {
        return Ok(square_like(canonical_sequence(domain), level(rest)?));
    }
    if let Some(rest) = s.strip_prefix("full:") {
        let (lit, base) = match rest.split_once(',') {
            Some((l, b)) => (l, b),
            None => (rest, "canonical"),
        };
        let lambda: Ordinal = lit.parse()?;
        let base = parse_selector(base, n, domain)?;
        return full_at(base, lambda).map_err(|e| Error::Selector(e.to_string()));
    }
    Err(Error::Selector(format!("unknown selector {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::ord;

    fn t(v: &[&str]) -> Vec<Ordinal> {
        v.iter().map(|s| ord(s)).collect()
    }

    #[test]
    fn trivial_examples() {
        let c = trivial_sequence(Some(ord("w")), 1);
        assert_eq!(c.club(&t(&["5"])).unwrap().finite_members().unwrap(), t(&["0", "1", "2", "3", "4"]));
        assert_eq!(c.club(&t(&["w"])), Err(Error::NotIndex(t(&["w"]))));
        let c2 = trivial_sequence(Some(ord("w")), 2);
        assert_eq!(c2.club(&t(&["3", "5"])).unwrap().finite_members().unwrap(), t(&["0", "1", "2"]));
        let c3 = trivial_sequence(Some(ord("w+1")), 1);
        assert_eq!(c3.club(&t(&["w"])).unwrap().min_above(&ord("4")), Some(ord("4")));
    }

    #[test]
    fn canonical_examples() {
        let c = canonical_sequence(None);
        assert_eq!(c.club(&t(&["w"])).unwrap().element_at(&ord("3")), Some(ord("3")));
        assert_eq!(c.club(&t(&["w*2"])).unwrap().min_above(&ord("1")), Some(ord("w")));
        assert_eq!(c.club(&t(&["7"])).unwrap(), Club::singleton(ord("6")));
        assert_eq!(c.club(&t(&["0"])).unwrap(), Club::Empty);
        assert!(c.club(&t(&["3", "w"])).is_err());
    }

    #[test]
    fn compound_examples() {
        let c = compound(canonical_sequence(None), 2);
        assert_eq!(c.club(&t(&["w*3", "w^2"])).unwrap(), Club::singleton(ord("w*2")));
        assert_eq!(c.club(&t(&["0", "w"])).unwrap(), Club::Empty);
        assert!(c.club(&t(&["w+1", "w^2"])).is_err());
        let c3 = compound(canonical_sequence(None), 3);
        for idx in [t(&["w*2", "w*3", "w^2"]), t(&["2", "3", "w"])] {
            match c3.club(&idx) {
                Ok(club) => assert!(club.is_empty(), "{idx:?} -> {club}"),
                Err(Error::NotIndex(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert_eq!(c3.club(&t(&["w*2", "w^2"])).unwrap(), Club::singleton(ord("w")));
        assert!(c3.is_index(&t(&["w", "w*2", "w^2"])).unwrap());
        assert_eq!(c3.club(&t(&["w", "w*2", "w^2"])).unwrap(), Club::Empty);
    }

    #[test]
    fn square_examples() {
        let c = square_like(canonical_sequence(None), 2);
        assert_eq!(c.club(&t(&["w*2", "w^2"])).unwrap(), Club::singleton(ord("w")));
        assert_eq!(c.club(&t(&["0", "w^2"])).unwrap(), Club::Empty);
        let tr = square_like(trivial_sequence(Some(ord("w^2")), 1), 2);
        assert_eq!(tr.club(&t(&["w", "w*3"])).unwrap(), Club::full(ord("w")));
        assert_eq!(tr.club(&t(&["5", "w*3"])).unwrap(), Club::singleton(ord("4")));
    }

    #[test]
    fn full_at_examples() {
        let c = full_at(canonical_sequence(Some(ord("w^2"))), ord("w")).unwrap();
        assert_eq!(c.club(&t(&["w"])).unwrap(), Club::full(ord("w")));
        let c = full_at(compound(canonical_sequence(Some(ord("w^3"))), 2), ord("w")).unwrap();
        assert_eq!(c.club(&t(&["5", "w"])).unwrap(), Club::singleton(ord("4")));
        assert_eq!(c.club(&t(&["w*2", "w^2"])).unwrap(), Club::singleton(ord("w")));
    }

    #[test]
    fn club_queries() {
        let l = Club::Ladder(ord("w^2+w*3"));
        assert_eq!(l.min_above(&ord("w^2+w*2+5")), Some(ord("w^2+w*2+5")));
        assert_eq!(l.min_above(&ord("w^2+w*2")), Some(ord("w^2+w*2")));
        assert_eq!(l.min_above(&ord("w*7")), Some(ord("w^2+w*2")));
        assert_eq!(l.sup_below(&ord("w^2+w*2+5")), ord("w^2+w*2+4"));
        assert_eq!(l.sup_below(&ord("w^2+w*2")), ord("0"));
        assert_eq!(l.count_below(&ord("w^2+w*2+5")), ord("5"));
        assert_eq!(l.max_below(&ord("w^2+w*2")), None);
        let f = Club::full(ord("w*2"));
        assert_eq!(f.sup_below(&ord("w+3")), ord("w+2"));
        assert_eq!(f.sup_below(&ord("w")), ord("w"));
        assert!(f.is_accumulation(&ord("w")));
        assert!(!l.is_accumulation(&ord("w^2+w*2")));
        let e = Club::Ladder(ord("w^(w)"));
        assert_eq!(e.min_above(&ord("w^3+1")), Some(ord("w^4")));
        assert_eq!(e.min_above(&ord("w^3")), Some(ord("w^3")));
        assert_eq!(e.index_of(&ord("w^3")), Some(ord("3")));
    }

    #[test]
    fn selectors() {
        assert_eq!(parse_selector("canonical", 1, None).unwrap().order(), 1);
        assert_eq!(parse_selector("canonical", 3, None).unwrap().order(), 3);
        assert_eq!(parse_selector("compound:2", 2, None).unwrap().order(), 2);
        assert!(parse_selector("compound:1", 2, None).is_err());
        assert!(parse_selector("bogus", 1, None).is_err());
        let f = parse_selector("full:w,compound:2", 2, None).unwrap();
        assert_eq!(f.club(&t(&["w"])).unwrap(), Club::full(ord("w")));
        assert!(parse_selector("full:5", 1, None).is_err());
    }
}
