//! The Tutte polynomial, generalized Tutte–Grothendieck evaluations, and
//! the flow/tension specializations and convolution.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, OrientedMultigraph};
use crate::{rational, Integer, Rational, TuttePolynomial};
use num_traits::{One, Zero};

/// `t(G)` by deletion-contraction: loops give `y`, coloops `x`, and an
/// ordinary edge splits into `t(G\e) + t(G/e)`.
pub fn tutte_polynomial(g: &OrientedMultigraph) -> TuttePolynomial {
    match g.reduction_edge() {
        None => TuttePolynomial::one(),
        Some((e, EdgeKind::Loop)) => &TuttePolynomial::y() * &tutte_polynomial(&g.delete_edge(e).expect("edge of g")),
        Some((e, EdgeKind::Coloop)) => {
            &TuttePolynomial::x() * &tutte_polynomial(&g.contract_edge(e).expect("edge of g"))
        }
        Some((e, EdgeKind::Ordinary)) => {
            &tutte_polynomial(&g.delete_edge(e).expect("edge of g"))
                + &tutte_polynomial(&g.contract_edge(e).expect("edge of g"))
        }
    }
}

/// `sum_S (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))` over all edge subsets.
pub fn tutte_corank_nullity(g: &OrientedMultigraph, caps: &Caps) -> Result<TuttePolynomial> {
    caps.check_subsets("corank-nullity expansion", g.num_edges())?;
    let full_rank = g.rank();
    let mut total = TuttePolynomial::zero();
    for bits in 0..1u64 << g.num_edges() {
        let s = g.edge_set_from_bits(bits);
        let rank = g.restrict(&s)?.rank();
        total = total + shifted_power(full_rank - rank, s.len() - rank);
    }
    Ok(total)
}

/// `(x-1)^a (y-1)^b` expanded.
fn shifted_power(a: usize, b: usize) -> TuttePolynomial {
    let mut out = TuttePolynomial::zero();
    for i in 0..=a {
        for j in 0..=b {
            let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
            let c = binomial(a, i) * binomial(b, j) * sign;
            out.add_term(i as u32, j as u32, c);
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> Integer {
    (0..k).fold(Integer::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Structure constants of a Tutte–Grothendieck invariant: `f(G) = sigma
/// f(G\e) + tau f(G/e)` on ordinary edges, `f_L f(G\e)` on loops and `f_I
/// f(G/e)` on coloops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TgParams {
    pub sigma: Integer,
    pub tau: Integer,
    pub loop_value: Rational,
    pub coloop_value: Rational,
}

impl TgParams {
    pub fn new(sigma: i64, tau: i64, loop_value: i64, coloop_value: i64) -> Self {
        TgParams {
            sigma: sigma.into(),
            tau: tau.into(),
            loop_value: rational(loop_value),
            coloop_value: rational(coloop_value),
        }
    }

    /// The nowhere-zero `Z_k`-flow count.
    pub fn flow(k: i64) -> Self {
        TgParams::new(-1, 1, k - 1, 0)
    }

    /// The nowhere-zero `Z_l`-tension count.
    pub fn tension(l: i64) -> Self {
        TgParams::new(1, -1, 0, l - 1)
    }
}

/// `sigma^xi tau^(|V|-c) t(f_I / tau, f_L / sigma)`.
pub fn tg_evaluate(g: &OrientedMultigraph, p: &TgParams) -> Result<Rational> {
    if p.sigma.is_zero() || p.tau.is_zero() {
        return Err(Error::ZeroStructureConstant);
    }
    let sigma = Rational::from_integer(p.sigma.clone());
    let tau = Rational::from_integer(p.tau.clone());
    let t = tutte_polynomial(g).map(|c| Rational::from_integer(c.clone()));
    let value = t.eval(&(&p.coloop_value / &tau), &(&p.loop_value / &sigma));
    Ok(num_traits::pow(sigma, g.cyclotomic_number()) * num_traits::pow(tau, g.rank()) * value)
}

/// The invariant evaluated by running its own recursion; agrees with
/// [`tg_evaluate`].
pub fn tg_recursive(g: &OrientedMultigraph, p: &TgParams) -> Rational {
    match g.reduction_edge() {
        None => Rational::one(),
        Some((e, EdgeKind::Loop)) => &p.loop_value * tg_recursive(&g.delete_edge(e).expect("edge of g"), p),
        Some((e, EdgeKind::Coloop)) => &p.coloop_value * tg_recursive(&g.contract_edge(e).expect("edge of g"), p),
        Some((e, EdgeKind::Ordinary)) => {
            Rational::from_integer(p.sigma.clone()) * tg_recursive(&g.delete_edge(e).expect("edge of g"), p)
                + Rational::from_integer(p.tau.clone()) * tg_recursive(&g.contract_edge(e).expect("edge of g"), p)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    /// `t(0, 1 + k)`
    Flow,
    /// `t(1 + l, 0)`
    Tension,
}

pub fn evaluate(t: &TuttePolynomial, x: i64, y: i64) -> Integer {
    t.eval(&x.into(), &y.into())
}

pub fn specialize(g: &OrientedMultigraph, which: Specialization, arg: u32) -> Integer {
    let t = tutte_polynomial(g);
    let a = i64::from(arg);
    match which {
        Specialization::Flow => evaluate(&t, 0, 1 + a),
        Specialization::Tension => evaluate(&t, 1 + a, 0),
    }
}

/// `sum_S t_{G[S]}(0, 1 + k) t_{G/S}(1 + l, 0)` over all edge subsets, with
/// isolated vertices pruned from each minor.
pub fn convolution(g: &OrientedMultigraph, l: u32, k: u32, caps: &Caps) -> Result<Integer> {
    caps.check_subsets("convolution", g.num_edges())?;
    let mut total = Integer::zero();
    for bits in 0..1u64 << g.num_edges() {
        let s = g.edge_set_from_bits(bits);
        let inner = g.restrict(&s)?.prune_isolated();
        let outer = g.contract(&s)?.prune_isolated();
        total += specialize(&inner, Specialization::Flow, k) * specialize(&outer, Specialization::Tension, l);
    }
    Ok(total)
}
