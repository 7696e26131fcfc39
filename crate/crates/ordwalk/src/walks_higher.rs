//! Higher walks: the signed walk trees `Tr_n` and everything read off them.
//!
//! A node of a tree is addressed by a string `sigma` over `0..n`. Expanding a
//! node with input `t = (g_0, .., g_n)` splits `t` at its C-maximal proper tail
//! `tau = (g_{j+1}, .., g_n)`, outputs `m = min(C_tau \ g_j)`, and spawns one
//! child per deletion index `i` in `{1, .., n+1} \ {j+1}` of
//! `u = (g_0, .., g_j, m, g_{j+1}, .., g_n)`. Children are labelled
//! `0, 1, ..` in decreasing order of `i`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use crate::clubs::CSeq;
use crate::error::{Error, Result};
use crate::formal_sum::FormalSum;
use crate::ordinal::{Kind, Ordinal};

pub type Sigma = Vec<u8>;

/// Default node budget for a single expansion.
pub const DEFAULT_NODE_CAP: usize = 1 << 20;

pub fn sigma_string(s: &[u8]) -> String {
    s.iter().map(|d| char::from(b'0' + d)).collect()
}

fn parity(k: usize) -> i8 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `t` with coordinate `i` removed.
pub fn delete(t: &[Ordinal], i: usize) -> Vec<Ordinal> {
    let mut v = t.to_vec();
    v.remove(i);
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailSplit {
    pub head: Vec<Ordinal>,
    pub tau: Vec<Ordinal>,
    pub j: usize,
}

/// Splits `t` at its longest proper tail that is a C-index.
pub fn tail_split(c: &CSeq, t: &[Ordinal]) -> Result<TailSplit> {
    for k in 1..=t.len() {
        if c.is_index(&t[k..])? {
            return Ok(TailSplit { head: t[..k].to_vec(), tau: t[k..].to_vec(), j: k - 1 });
        }
    }
    unreachable!("the empty tail is always an index")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Child {
    pub label: u8,
    /// Deletion index into the extended tuple.
    pub deleted: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Boundary,
    Output { out_sign: i8, out: Ordinal, j: usize, children: Vec<Child> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub in_sign: i8,
    pub input: Vec<Ordinal>,
    pub kind: NodeKind,
}

impl Node {
    pub fn is_boundary(&self) -> bool {
        matches!(self.kind, NodeKind::Boundary)
    }

    pub fn output(&self) -> Option<(i8, &Ordinal)> {
        match &self.kind {
            NodeKind::Output { out_sign, out, .. } => Some((*out_sign, out)),
            NodeKind::Boundary => None,
        }
    }
}

/// One expansion step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Boundary,
    Output { out_sign: i8, out: Ordinal, j: usize, children: Vec<(Child, i8, Vec<Ordinal>)> },
}

pub fn expand_once(c: &CSeq, sign: i8, t: &[Ordinal]) -> Result<Step> {
    let split = tail_split(c, t)?;
    let j = split.j;
    let Some(m) = c.club(&split.tau)?.min_above(&t[j]) else {
        return Ok(Step::Boundary);
    };
    let n = t.len() - 1;
    let mut u = split.head;
    u.push(m.clone());
    u.extend(split.tau);
    let mut children = Vec::with_capacity(n);
    for i in (1..=n + 1).rev().filter(|&i| i != j + 1) {
        let label = children.len() as u8;
        children.push((Child { label, deleted: i }, sign * parity(i + j), delete(&u, i)));
    }
    Ok(Step::Output { out_sign: sign * parity(j), out: m, j, children })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedWalkTree {
    pub n: usize,
    pub nodes: BTreeMap<Sigma, Node>,
}

impl SignedWalkTree {
    pub fn root(&self) -> &Node {
        &self.nodes[&Sigma::new()]
    }

    pub fn get(&self, sigma: &[u8]) -> Option<&Node> {
        self.nodes.get(sigma)
    }

    /// `(sigma, out_sign, out)` for every non-boundary node.
    pub fn outputs(&self) -> impl Iterator<Item = (&Sigma, i8, &Ordinal)> {
        self.nodes.iter().filter_map(|(s, n)| n.output().map(|(g, o)| (s, g, o)))
    }

    /// Pluses minus minuses among the outputs.
    pub fn charge(&self) -> i64 {
        self.outputs().map(|(_, s, _)| s as i64).sum()
    }

    /// Index strings of the non-boundary nodes.
    pub fn tree_type(&self) -> BTreeSet<Sigma> {
        self.outputs().map(|(s, _, _)| s.clone()).collect()
    }

    /// Terminal inputs with their signs, in sigma order.
    pub fn boundary_inputs(&self) -> Vec<(i8, Vec<Ordinal>)> {
        self.nodes
            .values()
            .filter(|n| n.is_boundary())
            .map(|n| (n.in_sign, n.input.clone()))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.root().is_boundary()
    }
}

fn check_tuple(c: &CSeq, t: &[Ordinal]) -> Result<usize> {
    if t.len() < 2 {
        return Err(Error::BadArgs("walk input needs at least two ordinals".into()));
    }
    let n = t.len() - 1;
    if c.order() < n {
        return Err(Error::OrderTooLow { have: c.order(), need: n });
    }
    if t.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadArgs(format!("{} is not nondecreasing", crate::error::fmt_tuple(t))));
    }
    if !c.in_domain(&t[n]) {
        return Err(Error::BadArgs(format!("{} is outside the domain", t[n])));
    }
    Ok(n)
}

/// `Tr_n(sign, t)` for `t` of length `n + 1`.
pub fn expand_tr(c: &CSeq, sign: i8, t: &[Ordinal]) -> Result<SignedWalkTree> {
    expand_tr_capped(c, sign, t, DEFAULT_NODE_CAP)
}

pub fn expand_tr_capped(c: &CSeq, sign: i8, t: &[Ordinal], cap: usize) -> Result<SignedWalkTree> {
    let n = check_tuple(c, t)?;
    let mut nodes = BTreeMap::new();
    let mut stack = vec![(Sigma::new(), sign, t.to_vec())];
    while let Some((sigma, s, input)) = stack.pop() {
        if nodes.len() >= cap {
            return Err(Error::TreeTooLarge(cap));
        }
        let kind = match expand_once(c, s, &input)? {
            Step::Boundary => NodeKind::Boundary,
            Step::Output { out_sign, out, j, children } => {
                let mut labels = Vec::with_capacity(children.len());
                for (child, cs, ct) in children {
                    let mut cs_sigma = sigma.clone();
                    cs_sigma.push(child.label);
                    stack.push((cs_sigma, cs, ct));
                    labels.push(child);
                }
                NodeKind::Output { out_sign, out, j, children: labels }
            }
        };
        nodes.insert(sigma, Node { in_sign: s, input, kind });
    }
    Ok(SignedWalkTree { n, nodes })
}

pub fn rho2n(c: &CSeq, t: &[Ordinal]) -> Result<i64> {
    expand_tr(c, 1, t).map(|tr| tr.charge())
}

pub fn rho2t(c: &CSeq, t: &[Ordinal]) -> Result<BTreeSet<Sigma>> {
    expand_tr(c, 1, t).map(|tr| tr.tree_type())
}

fn claim(sigma: &[u8], detail: String) -> Error {
    Error::ClaimViolation { sigma: sigma_string(sigma), detail }
}

/// Checks the descent structure behind finiteness on every edge of the tree:
/// deleting `i = j` raises coordinate `j` only; deleting `i > j + 1` lowers
/// the coordinates `j+1 .. i-1` only; deleting `i < j` lands on a boundary;
/// and among any `n` consecutive steps to non-boundary nodes at least one
/// deletes some `i > j + 1`.
pub fn verify_descent_claims(tree: &SignedWalkTree) -> Result<()> {
    let n = tree.n;
    let mut run: HashMap<&[u8], usize> = HashMap::new();
    run.insert(&[], 0);
    for (sigma, node) in &tree.nodes {
        let NodeKind::Output { j, children, .. } = &node.kind else { continue };
        let t = &node.input;
        let strict = t.windows(2).all(|w| w[0] < w[1]);
        let base = run.get(sigma.as_slice()).copied().unwrap_or(0);
        for ch in children {
            let mut cs = sigma.clone();
            cs.push(ch.label);
            let (child_sigma, child) = tree.nodes.get_key_value(&cs).ok_or_else(|| claim(&cs, "missing child".into()))?;
            let s = &child.input;
            let i = ch.deleted;
            let same = |k: usize| s[k] == t[k];
            if i == *j {
                if s[i] <= t[i] || !(0..=n).filter(|&k| k != i).all(same) {
                    return Err(claim(&cs, format!("step deleting {i} should raise coordinate {i} only")));
                }
            } else if i > j + 1 {
                let lowered = (j + 1..i).all(|k| if strict { s[k] < t[k] } else { s[k] <= t[k] }) && s[j + 1] < t[j + 1];
                if !lowered || !(0..=n).filter(|&k| k <= *j || k >= i).all(same) {
                    return Err(claim(&cs, format!("step deleting {i} should lower coordinates {}..{} only", j + 1, i - 1)));
                }
            } else if i < *j && !child.is_boundary() {
                return Err(claim(&cs, format!("step deleting {i} < j = {j} should reach a boundary")));
            }
            let r = if i > j + 1 { 0 } else { base + 1 };
            if !child.is_boundary() && r >= n {
                return Err(claim(&cs, format!("{n} consecutive steps without lowering")));
            }
            run.insert(child_sigma.as_slice(), r);
        }
    }
    Ok(())
}

/// `L_n(beta, g)` at every non-boundary node of the tree of `(beta, g)`.
pub fn lower_values(c: &CSeq, tree: &SignedWalkTree) -> Result<BTreeMap<Sigma, Ordinal>> {
    let beta = &tree.root().input[0];
    let mut out: BTreeMap<Sigma, Ordinal> = BTreeMap::new();
    for (sigma, node) in &tree.nodes {
        if node.is_boundary() {
            continue;
        }
        let here = c.club_or_empty(&node.input[1..])?.sup_below(beta);
        let parent = match sigma.split_last() {
            Some((_, p)) => out[p].clone(),
            None => Ordinal::zero(),
        };
        out.insert(sigma.clone(), parent.max(here));
    }
    Ok(out)
}

fn with_first(beta: &Ordinal, g: &[Ordinal]) -> Vec<Ordinal> {
    let mut t = Vec::with_capacity(g.len() + 1);
    t.push(beta.clone());
    t.extend_from_slice(g);
    t
}

/// `L_n(beta, g)(sigma)` for `sigma` in the tree type of `(beta, g)`.
pub fn lower_trace_n(c: &CSeq, beta: &Ordinal, g: &[Ordinal], sigma: &[u8]) -> Result<Ordinal> {
    let tree = expand_tr(c, 1, &with_first(beta, g))?;
    lower_values(c, &tree)?
        .remove(sigma)
        .ok_or_else(|| Error::BadArgs(format!("{:?} is not a node of the tree", sigma_string(sigma))))
}

/// Largest value of `L_n(beta, g)`, 0 for an empty tree.
pub fn max_lower_n(c: &CSeq, beta: &Ordinal, g: &[Ordinal]) -> Result<Ordinal> {
    let tree = expand_tr(c, 1, &with_first(beta, g))?;
    Ok(lower_values(c, &tree)?.into_values().max().unwrap_or_default())
}

/// First node where `small` fails to be an initial subtree of `big`, with
/// equal outputs and signs and inputs differing at most in the first coordinate.
pub fn initial_subtree_mismatch(small: &SignedWalkTree, big: &SignedWalkTree) -> Option<Sigma> {
    for (sigma, a) in &small.nodes {
        if a.is_boundary() {
            continue;
        }
        let ok = match big.nodes.get(sigma) {
            Some(b) => a.kind == b.kind && a.in_sign == b.in_sign && a.input[1..] == b.input[1..],
            None => false,
        };
        if !ok {
            return Some(sigma.clone());
        }
    }
    None
}

/// `sum_i (-1)^i s [t with coordinates 0 and i+1 removed]` over the terms.
pub fn boundary_sum(terms: &[(i8, Vec<Ordinal>)]) -> FormalSum {
    let mut out = FormalSum::zero();
    for (s, t) in terms {
        let g = &t[1..];
        for i in 0..g.len() {
            out.add_term(delete(g, i), *s as i64 * parity(i) as i64);
        }
    }
    out
}

pub fn boundary_inputs(c: &CSeq, sign: i8, t: &[Ordinal]) -> Result<Vec<(i8, Vec<Ordinal>)>> {
    expand_tr(c, sign, t).map(|tr| tr.boundary_inputs())
}

/// Matches the boundary inputs of `Tr_n((-1)^i, alpha, g^i)`, `i <= n`, into
/// opposite-signed pairs. Returns one tuple per pair.
pub fn pairing_partition(c: &CSeq, alpha: &Ordinal, g: &[Ordinal]) -> Result<Vec<Vec<Ordinal>>> {
    if g.len() < 2 || g.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadArgs(format!("{} must be strictly increasing", crate::error::fmt_tuple(g))));
    }
    if *alpha > g[0] {
        return Err(Error::BadArgs(format!("need {alpha} <= {}", g[0])));
    }
    let mut counts: BTreeMap<Vec<Ordinal>, (usize, usize)> = BTreeMap::new();
    for i in 0..g.len() {
        for (s, t) in boundary_inputs(c, parity(i), &with_first(alpha, &delete(g, i)))? {
            let e = counts.entry(t).or_default();
            if s > 0 {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
    }
    let mut pairs = Vec::new();
    for (t, (plus, minus)) in counts {
        if plus != minus {
            return Err(Error::Matching { tuple: t, plus, minus });
        }
        pairs.extend(std::iter::repeat_n(t, plus));
    }
    Ok(pairs)
}

/// Signed sum of the inputs of `Tr_n(+, beta, g)` at nodes with `L_n = xi`.
pub fn r2n_slice(c: &CSeq, xi: &Ordinal, beta: &Ordinal, g: &[Ordinal]) -> Result<FormalSum> {
    if xi >= beta {
        return Err(Error::BadArgs(format!("r2n_slice needs {xi} < {beta}")));
    }
    let tree = expand_tr(c, 1, &with_first(beta, g))?;
    let mut out = FormalSum::zero();
    for (sigma, v) in lower_values(c, &tree)? {
        if v == *xi {
            let node = &tree.nodes[&sigma];
            out.add_term(node.input.clone(), node.in_sign as i64);
        }
    }
    Ok(out)
}

/// `max_i max L_n(alpha, d^i)`.
pub fn face_eta(c: &CSeq, alpha: &Ordinal, d: &[Ordinal]) -> Result<Ordinal> {
    let mut eta = Ordinal::zero();
    for i in 0..d.len() {
        eta = eta.max(max_lower_n(c, alpha, &delete(d, i))?);
    }
    Ok(eta)
}

/// `sum_i (-1)^i rho2n(xi, d^i)`.
pub fn face_rho2n(c: &CSeq, xi: &Ordinal, d: &[Ordinal]) -> Result<i64> {
    let mut f = 0;
    for i in 0..d.len() {
        f += parity(i) as i64 * rho2n(c, &with_first(xi, &delete(d, i)))?;
    }
    Ok(f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub eta: Ordinal,
    pub value: i64,
    pub constant: bool,
    pub samples: Vec<(Ordinal, i64)>,
}

/// Ladder points of `alpha` above `eta`, each followed by its successor.
pub fn ladder_samples(alpha: &Ordinal, eta: &Ordinal, count: usize) -> Vec<Ordinal> {
    let mut out = Vec::with_capacity(count);
    let Some(mut k) = alpha.fundamental_ceil(&eta.succ()) else { return out };
    while out.len() < count {
        let p = alpha.fundamental(&k).expect("limit");
        out.push(p.clone());
        if out.len() < count {
            out.push(p.succ());
        }
        k += 1u32;
    }
    out
}

/// Checks that `xi -> sum_i (-1)^i rho2n(xi, d^i)` is constant on sampled
/// points of `(eta, alpha]`.
pub fn coherence_check(c: &CSeq, d: &[Ordinal], alpha: &Ordinal, samples: usize) -> Result<CoherenceReport> {
    if d.len() < 2 || d.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadArgs(format!("{} must be strictly increasing", crate::error::fmt_tuple(d))));
    }
    if !alpha.is_limit() || *alpha > d[0] {
        return Err(Error::BadArgs(format!("need a limit {alpha} <= {}", d[0])));
    }
    let eta = face_eta(c, alpha, d)?;
    if eta >= *alpha {
        return Err(Error::Precondition(format!("lower trace reaches {eta} >= {alpha}")));
    }
    let value = face_rho2n(c, alpha, d)?;
    let mut pts = Vec::new();
    let mut constant = true;
    for xi in ladder_samples(alpha, &eta, samples) {
        let v = face_rho2n(c, &xi, d)?;
        constant &= v == value;
        pts.push((xi, v));
    }
    Ok(CoherenceReport { eta, value, constant, samples: pts })
}

fn tuple3(alpha: &Ordinal, beta: &Ordinal, gamma: &Ordinal) -> [Ordinal; 3] {
    [alpha.clone(), beta.clone(), gamma.clone()]
}

/// Output sign of `Tr_2(+, alpha, beta, gamma)` at `sigma`.
pub fn node_sign(c: &CSeq, alpha: &Ordinal, beta: &Ordinal, gamma: &Ordinal, sigma: &[u8]) -> Result<i8> {
    let tree = expand_tr(c, 1, &tuple3(alpha, beta, gamma))?;
    tree.get(sigma)
        .and_then(|n| n.output())
        .map(|(s, _)| s)
        .ok_or_else(|| Error::BadArgs(format!("{:?} is not a node of the tree", sigma_string(sigma))))
}

fn oscillations(tree: &SignedWalkTree) -> BTreeMap<Sigma, usize> {
    let mut out: BTreeMap<Sigma, usize> = BTreeMap::new();
    for (sigma, s, _) in tree.outputs() {
        let o = match sigma.split_last() {
            None => 0,
            Some((_, p)) => {
                let ps = tree.nodes[p].output().expect("parent has output").0;
                out[p] + usize::from(ps != s)
            }
        };
        out.insert(sigma.clone(), o);
    }
    out
}

/// Number of output-sign changes along the path to `sigma`.
pub fn oscillation(c: &CSeq, alpha: &Ordinal, beta: &Ordinal, gamma: &Ordinal, sigma: &[u8]) -> Result<usize> {
    let tree = expand_tr(c, 1, &tuple3(alpha, beta, gamma))?;
    oscillations(&tree)
        .remove(sigma)
        .ok_or_else(|| Error::BadArgs(format!("{:?} is not a node of the tree", sigma_string(sigma))))
}

/// Maximal oscillation over the tree, 0 when it is empty.
pub fn depth(c: &CSeq, alpha: &Ordinal, beta: &Ordinal, gamma: &Ordinal) -> Result<usize> {
    let tree = expand_tr(c, 1, &tuple3(alpha, beta, gamma))?;
    Ok(oscillations(&tree).into_values().max().unwrap_or(0))
}

/// The stage-by-stage 2-coherent family `phi_{beta gamma}` built from the
/// order-one clubs of a sequence, evaluated lazily and memoized.
pub struct Recursive2Coherent<'a> {
    c: &'a CSeq,
    bound: Ordinal,
    memo: Mutex<HashMap<(Ordinal, Ordinal, Ordinal), FormalSum>>,
}

pub fn build_recursive_2coherent(c: &CSeq, bound: Ordinal) -> Recursive2Coherent<'_> {
    Recursive2Coherent { c, bound, memo: Mutex::new(HashMap::new()) }
}

impl Recursive2Coherent<'_> {
    /// `phi_{beta gamma}(xi)` for `xi < beta < gamma <= bound`.
    pub fn phi(&self, beta: &Ordinal, gamma: &Ordinal, xi: &Ordinal) -> Result<FormalSum> {
        if !(xi < beta && beta < gamma && *gamma <= self.bound) {
            return Err(Error::BadArgs(format!("phi needs {xi} < {beta} < {gamma} <= {}", self.bound)));
        }
        self.eval(beta, gamma, xi)
    }

    fn eval(&self, beta: &Ordinal, gamma: &Ordinal, xi: &Ordinal) -> Result<FormalSum> {
        let key = (beta.clone(), gamma.clone(), xi.clone());
        if let Some(v) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        let v = match gamma.kind() {
            Kind::Zero => unreachable!("beta < gamma"),
            Kind::Successor(delta) => {
                if *beta == delta {
                    FormalSum::zero()
                } else {
                    self.eval(beta, &delta, xi)?
                }
            }
            Kind::Limit => {
                let club = self.c.club(std::slice::from_ref(gamma))?;
                if club.order_type() != Some(Ordinal::omega()) {
                    return Err(Error::OutOfScope(format!("club {club} at {gamma} is not an omega-ladder")));
                }
                match club.index_of(beta).and_then(|i| i.as_u64()) {
                    Some(0) => FormalSum::zero(),
                    Some(i) => {
                        let prev = club.element_at(&Ordinal::nat(i - 1)).expect("ladder member");
                        if *xi >= prev {
                            FormalSum::zero()
                        } else {
                            &self.eval(&prev, gamma, xi)? - &self.eval(&prev, beta, xi)?
                        }
                    }
                    None => {
                        let b = club
                            .min_above(beta)
                            .ok_or_else(|| Error::NotCofinal { index: vec![gamma.clone()], xi: beta.clone() })?;
                        &self.eval(beta, &b, xi)? + &self.eval(&b, gamma, xi)?
                    }
                }
            }
        };
        self.memo.lock().expect("memo lock").insert(key, v.clone());
        Ok(v)
    }

    /// `phi_{gamma delta} - phi_{beta delta} + phi_{beta gamma}` at `xi`.
    pub fn coboundary(&self, beta: &Ordinal, gamma: &Ordinal, delta: &Ordinal, xi: &Ordinal) -> Result<FormalSum> {
        let a = self.phi(gamma, delta, xi)?;
        let b = self.phi(beta, delta, xi)?;
        let c = self.phi(beta, gamma, xi)?;
        Ok(&(&a - &b) + &c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clubs::{canonical_sequence, compound, full_at};
    use crate::ordinal::ord;

    fn os(v: &[&str]) -> Vec<Ordinal> {
        v.iter().map(|s| ord(s)).collect()
    }

    fn c2() -> std::sync::Arc<CSeq> {
        compound(canonical_sequence(None), 2)
    }

    #[test]
    fn splits() {
        let c = c2();
        let s = tail_split(&c, &os(&["0", "1", "3"])).unwrap();
        assert_eq!((s.tau.clone(), s.j), (os(&["3"]), 1));
        let s = tail_split(&c, &os(&["0", "2", "3"])).unwrap();
        assert_eq!((s.tau.clone(), s.j), (os(&["2", "3"]), 0));
        let c1 = canonical_sequence(None);
        let s = tail_split(&c1, &os(&["w", "w*2"])).unwrap();
        assert_eq!((s.tau, s.j), (os(&["w*2"]), 0));
    }

    #[test]
    fn small_trees() {
        let c = c2();
        let t = expand_tr(&c, 1, &os(&["0", "1", "2"])).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.charge(), 0);
        let t = expand_tr(&c, 1, &os(&["0", "1", "3"])).unwrap();
        assert_eq!(t.root().output(), Some((-1, &ord("2"))));
        assert_eq!(t.charge(), -1);
        assert_eq!(t.boundary_inputs(), vec![(1, os(&["0", "1", "2"])), (1, os(&["0", "2", "3"]))]);
        assert_eq!(depth(&c, &ord("0"), &ord("1"), &ord("3")).unwrap(), 0);
        verify_descent_claims(&t).unwrap();
    }

    #[test]
    fn order_one_is_classical() {
        let c = canonical_sequence(None);
        let t = expand_tr(&c, 1, &os(&["1", "w*2"])).unwrap();
        let outs: Vec<_> = t.outputs().map(|(s, g, o)| (sigma_string(s), g, o.clone())).collect();
        assert_eq!(outs, vec![("".into(), 1, ord("w")), ("0".into(), 1, ord("1"))]);
    }

    #[test]
    fn boundary_examples() {
        let (x, b, g, d) = (ord("0"), ord("3"), ord("5"), ord("w"));
        let s = boundary_sum(&[(1, vec![x.clone(), b.clone(), g.clone()])]);
        assert_eq!(s, &FormalSum::term(vec![g.clone()], 1) - &FormalSum::term(vec![b.clone()], 1));
        let cyc = [(1, vec![x.clone(), g.clone(), d.clone()]), (-1, vec![x.clone(), b.clone(), d]), (1, vec![x, b, g])];
        assert!(boundary_sum(&cyc).is_zero());
    }

    #[test]
    fn full_at_identity() {
        let f = full_at(c2(), ord("w")).unwrap();
        let c1 = canonical_sequence(None);
        for (a, b) in [("0", "3"), ("2", "7"), ("4", "4")] {
            let (a, b) = (ord(a), ord(b));
            let r = crate::walks_classic::rho2(&c1, &a, &b).unwrap() as i64;
            assert_eq!(rho2n(&f, &[a, b, ord("w")]).unwrap(), r);
        }
    }

    #[test]
    fn recursive_family_vanishes() {
        let c = canonical_sequence(None);
        let fam = build_recursive_2coherent(&c, ord("w^2"));
        for (b, g, x) in [("3", "w", "1"), ("w+2", "w*3", "5"), ("w*2", "w^2", "w+1")] {
            assert!(fam.phi(&ord(b), &ord(g), &ord(x)).unwrap().is_zero());
        }
    }
}
