//! Classical walks along an order-one C-sequence.

use crate::clubs::CSeq;
use crate::error::{Error, Result};
use crate::ordinal::{Kind, Ordinal};

/// Upper trace of a walk, from `beta` down to `alpha`, with its lower trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTrace {
    pub steps: Vec<Ordinal>,
    /// `lower[j]` is the running max of `sup(alpha ∩ C_{steps[i]})` over `i <= j`.
    pub lower: Vec<Ordinal>,
}

impl WalkTrace {
    pub fn rho2(&self) -> usize {
        self.steps.len() - 1
    }

    /// Last entry of the lower trace, 0 for the trivial walk.
    pub fn max_lower(&self) -> Ordinal {
        self.lower.last().cloned().unwrap_or_default()
    }
}

fn check_order(c: &CSeq, alpha: &Ordinal, beta: &Ordinal) -> Result<()> {
    if alpha > beta {
        return Err(Error::BadArgs(format!("walk needs {alpha} <= {beta}")));
    }
    if !c.in_domain(beta) {
        return Err(Error::BadArgs(format!("{beta} is outside the domain")));
    }
    Ok(())
}

pub fn upper_trace(c: &CSeq, alpha: &Ordinal, beta: &Ordinal) -> Result<WalkTrace> {
    check_order(c, alpha, beta)?;
    let mut steps = vec![beta.clone()];
    let mut lower: Vec<Ordinal> = Vec::new();
    let mut cur = beta.clone();
    while cur != *alpha {
        let club = c.club(std::slice::from_ref(&cur))?;
        let s = club.sup_below(alpha);
        let prev = lower.last().cloned().unwrap_or_default();
        lower.push(prev.max(s));
        cur = club
            .min_above(alpha)
            .ok_or_else(|| Error::NotCofinal { index: vec![cur.clone()], xi: alpha.clone() })?;
        steps.push(cur.clone());
    }
    Ok(WalkTrace { steps, lower })
}

pub fn rho2(c: &CSeq, alpha: &Ordinal, beta: &Ordinal) -> Result<usize> {
    upper_trace(c, alpha, beta).map(|t| t.rho2())
}

pub fn lower_trace(c: &CSeq, alpha: &Ordinal, beta: &Ordinal) -> Result<Vec<Ordinal>> {
    upper_trace(c, alpha, beta).map(|t| t.lower)
}

/// Maximal weight `|alpha ∩ C_b|` over the steps `b` before the last.
pub fn rho1(c: &CSeq, alpha: &Ordinal, beta: &Ordinal) -> Result<u64> {
    let tr = upper_trace(c, alpha, beta)?;
    let mut best = 0;
    for b in &tr.steps[..tr.steps.len() - 1] {
        let w = c.club(std::slice::from_ref(b))?.count_below(alpha);
        let w = w
            .as_u64()
            .ok_or_else(|| Error::WeightInfinite { alpha: alpha.clone(), beta: b.clone() })?;
        best = best.max(w);
    }
    Ok(best)
}

fn check_probe(alpha: &Ordinal, beta: &Ordinal, gamma: &Ordinal) -> Result<()> {
    if alpha < beta && beta < gamma {
        Ok(())
    } else {
        Err(Error::BadArgs(format!("need {alpha} < {beta} < {gamma}")))
    }
}

/// Whether `max L(beta, gamma) = alpha`.
pub fn r1_slice(c: &CSeq, alpha: &Ordinal, beta: &Ordinal, gamma: &Ordinal) -> Result<bool> {
    check_probe(alpha, beta, gamma)?;
    Ok(upper_trace(c, beta, gamma)?.max_lower() == *alpha)
}

/// The edge `(beta, min Tr(beta, gamma) \ (beta+1))` when `max L(beta, gamma) = alpha`.
pub fn r2_slice(
    c: &CSeq,
    alpha: &Ordinal,
    beta: &Ordinal,
    gamma: &Ordinal,
) -> Result<Option<(Ordinal, Ordinal)>> {
    check_probe(alpha, beta, gamma)?;
    let tr = upper_trace(c, beta, gamma)?;
    if tr.max_lower() != *alpha {
        return Ok(None);
    }
    let above = tr.steps[tr.steps.len() - 2].clone();
    Ok(Some((beta.clone(), above)))
}

/// The walk from `beta` down into `C_gamma`, ending at `min(C_gamma \ alpha)`.
///
/// When `beta` is not in `C_gamma` the first step goes up to
/// `min(C_gamma \ beta)`. The lower trace of that first step uses `C_gamma`.
pub fn internal_trace(c: &CSeq, gamma: &Ordinal, alpha: &Ordinal, beta: &Ordinal) -> Result<WalkTrace> {
    if c.order() < 2 {
        return Err(Error::OrderTooLow { have: c.order(), need: 2 });
    }
    if !(alpha <= beta && beta < gamma) {
        return Err(Error::BadArgs(format!("internal walk needs {alpha} <= {beta} < {gamma}")));
    }
    let cg = c.club(std::slice::from_ref(gamma))?;
    let not_cofinal = |index: Vec<Ordinal>, xi: &Ordinal| Error::NotCofinal { index, xi: xi.clone() };
    let eta = cg.min_above(alpha).ok_or_else(|| not_cofinal(vec![gamma.clone()], alpha))?;
    let mut steps = vec![beta.clone()];
    let mut lower: Vec<Ordinal> = Vec::new();
    let mut cur = beta.clone();
    if !cg.contains(beta) {
        lower.push(cg.sup_below(alpha));
        cur = cg.min_above(beta).ok_or_else(|| not_cofinal(vec![gamma.clone()], beta))?;
        steps.push(cur.clone());
    }
    while cur != eta {
        let index = vec![cur.clone(), gamma.clone()];
        let club = c.club(&index)?;
        let prev = lower.last().cloned().unwrap_or_default();
        lower.push(prev.max(club.sup_below(alpha)));
        cur = club.min_above(alpha).ok_or_else(|| not_cofinal(index, alpha))?;
        steps.push(cur.clone());
    }
    Ok(WalkTrace { steps, lower })
}

pub fn rho2_internal(c: &CSeq, gamma: &Ordinal, alpha: &Ordinal, beta: &Ordinal) -> Result<usize> {
    internal_trace(c, gamma, alpha, beta).map(|t| t.rho2())
}

/// `phi_beta(xi)` built by recursion on `beta`: 0 at `xi + 1 = beta`, the
/// value at the predecessor for other successors, and at limits the larger of
/// `i(xi) = |C_beta ∩ (xi+1)|` and `phi_{beta_i(xi)}(xi)`.
pub fn recursive_phi(c: &CSeq, beta: &Ordinal, xi: &Ordinal) -> Result<u64> {
    if xi >= beta {
        return Err(Error::BadArgs(format!("recursive_phi needs {xi} < {beta}")));
    }
    let target = xi.succ();
    let mut cur = beta.clone();
    let mut acc = 0u64;
    // The recursion is a tail call through max, so it unrolls into a loop.
    while cur != target {
        match cur.kind() {
            Kind::Successor(p) => cur = p,
            Kind::Limit => {
                let club = c.club(std::slice::from_ref(&cur))?;
                let i = club
                    .count_below(&target)
                    .as_u64()
                    .ok_or_else(|| Error::WeightInfinite { alpha: target.clone(), beta: cur.clone() })?;
                acc = acc.max(i);
                cur = club
                    .min_above(&target)
                    .ok_or_else(|| Error::NotCofinal { index: vec![cur.clone()], xi: target.clone() })?;
            }
            Kind::Zero => unreachable!("xi < beta"),
        }
    }
    Ok(acc)
}

/// `beta ◁ gamma` for the fiber maps of `rho`, with the least disagreement
/// searched over `ground` only.
pub fn branch_order<F>(rho: F, ground: &[Ordinal], beta: &Ordinal, gamma: &Ordinal) -> bool
where
    F: Fn(&Ordinal, &Ordinal) -> i64,
{
    if beta == gamma {
        return false;
    }
    let bound = beta.min(gamma);
    let mut pts: Vec<&Ordinal> = ground.iter().filter(|x| *x < bound).collect();
    pts.sort();
    for xi in pts {
        let (a, b) = (rho(xi, beta), rho(xi, gamma));
        if a != b {
            return a < b;
        }
    }
    beta < gamma
}
