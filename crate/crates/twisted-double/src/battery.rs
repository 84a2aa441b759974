//! Exact verification of the Hopf group-coalgebra, crossing,
//! quasi-triangular and ribbon axioms on sampled gradings.
//!
//! Every check is an exact identity between Laurent tensors. When the number
//! of basis tuples exceeds the configured limit, a seeded random subset is
//! tested instead.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hopf_core::{AxiomReport, TwistedAutomorphism};
use scalar_ring::LaurentScalar;

use crate::double::TwistedDouble;
use crate::element::{DoubleElement, DoubleTensor};
use crate::ribbon::RibbonData;
use crate::DoubleError;

/// Limits for the battery.
#[derive(Clone, Debug)]
pub struct BatteryConfig {
    /// Largest number of basis tuples tested exhaustively per check.
    pub max_tuples: usize,
    pub seed: u64,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        Self { max_tuples: 4096, seed: 0x5eed }
    }
}

/// The axiom report together with gradings whose ribbon checks were skipped.
#[derive(Clone, Debug, Default)]
pub struct BatteryReport {
    pub axioms: AxiomReport,
    /// Gradings with no rational square root of r_H, so no ribbon element.
    pub skipped_ribbon: Vec<String>,
}

struct Sampler {
    rng: StdRng,
    max: usize,
    dim: usize,
}

impl Sampler {
    fn tuples(&mut self, arity: usize) -> Vec<Vec<usize>> {
        let total = self.dim.checked_pow(arity as u32).unwrap_or(usize::MAX);
        if total <= self.max {
            (0..total)
                .map(|mut n| {
                    let mut t = vec![0; arity];
                    for slot in t.iter_mut().rev() {
                        *slot = n % self.dim;
                        n /= self.dim;
                    }
                    t
                })
                .collect()
        } else {
            (0..self.max).map(|_| (0..arity).map(|_| self.rng.gen_range(0..self.dim)).collect()).collect()
        }
    }
}

fn eq_tensor(x: &DoubleTensor, y: &DoubleTensor) -> bool {
    x.gradings == y.gradings && x.len() == y.len() && x.terms().all(|(k, c)| y.coeff(k) == *c)
}

/// Runs the full battery over all tuples of the given gradings.
pub fn verify_double_axioms(
    double: &TwistedDouble,
    gradings: &[TwistedAutomorphism],
    config: &BatteryConfig,
) -> Result<BatteryReport, DoubleError> {
    let mut rep = BatteryReport::default();
    let mut s = Sampler { rng: StdRng::seed_from_u64(config.seed), max: config.max_tuples, dim: double.dim() };
    hopf_axioms(double, gradings, &mut s, &mut rep.axioms)?;
    crossing_axioms(double, gradings, &mut s, &mut rep.axioms)?;
    quasitriangular_axioms(double, gradings, &mut rep.axioms)?;
    let ribbon = RibbonData::new(double)?;
    let mut ok = Vec::new();
    for g in gradings {
        match ribbon.sqrt_r(g) {
            Ok(_) => ok.push(g.clone()),
            Err(DoubleError::NoSquareRoot(_)) => rep.skipped_ribbon.push(g.to_string()),
            Err(e) => return Err(e),
        }
    }
    ribbon_axioms(&ribbon, gradings, &ok, &mut rep.axioms)?;
    integral_axioms(&ribbon, gradings, &mut rep.axioms)?;
    Ok(rep)
}

fn hopf_axioms(
    d: &TwistedDouble,
    gs: &[TwistedAutomorphism],
    s: &mut Sampler,
    rep: &mut AxiomReport,
) -> Result<(), DoubleError> {
    let id = d.identity_grading();
    for g in gs {
        let mut ok = true;
        for t in s.tuples(3) {
            let (x, y, z) = (d.basis(g, t[0]), d.basis(g, t[1]), d.basis(g, t[2]));
            ok &= d.mul(&d.mul(&x, &y)?, &z)? == d.mul(&x, &d.mul(&y, &z)?)?;
        }
        rep.push("associativity", ok);
        let one = d.one(g);
        let mut ok = true;
        for i in 0..d.dim() {
            let x = d.basis(g, i);
            ok &= d.mul(&one, &x)? == x && d.mul(&x, &one)? == x;
        }
        rep.push("unitality", ok);
    }
    for a in gs {
        for b in gs {
            let ab = a.compose(b);
            let mut ok = true;
            for t in s.tuples(2) {
                let (x, y) = (d.basis(&ab, t[0]), d.basis(&ab, t[1]));
                let lhs = d.coproduct(a, b, &d.mul(&x, &y)?)?;
                let rhs = d.mul_tensor(&d.coproduct(a, b, &x)?, &d.coproduct(a, b, &y)?)?;
                ok &= eq_tensor(&lhs, &rhs);
            }
            ok &= eq_tensor(&d.coproduct(a, b, &d.one(&ab))?, &d.one_tensor(&[a.clone(), b.clone()]));
            rep.push("coproduct multiplicativity", ok);
            for c in gs {
                let abc = ab.compose(c);
                let mut ok = true;
                for i in 0..d.dim() {
                    let x = d.basis(&abc, i);
                    let lhs = d.coproduct_leg(&d.coproduct(&ab, c, &x)?, 0, a, b)?;
                    let rhs = d.coproduct_leg(&d.coproduct(a, &b.compose(c), &x)?, 1, b, c)?;
                    ok &= eq_tensor(&lhs, &rhs);
                }
                rep.push("coassociativity", ok);
            }
        }
    }
    for g in gs {
        let gi = g.inverse()?;
        let (mut counital, mut antipode) = (true, true);
        for i in 0..d.dim() {
            let x = d.basis(g, i);
            let mut l = DoubleElement::zero(g.clone(), d.dim());
            for (k, c) in d.coproduct(g, &id, &x)?.terms() {
                l.coeffs[k[0]] += c * &d.counit(&d.basis(&id, k[1]));
            }
            let mut r = DoubleElement::zero(g.clone(), d.dim());
            for (k, c) in d.coproduct(&id, g, &x)?.terms() {
                r.coeffs[k[1]] += c * &d.counit(&d.basis(&id, k[0]));
            }
            counital &= l == x && r == x;
            // m_α(S_{α⁻¹}⊗id)Δ_{α⁻¹,α}(y) = ε(y)1_α for y in the neutral component.
            let y = d.basis(&id, i);
            let want = d.one(g).scale(&d.counit(&y));
            let left = d.multiply_legs(&d.map_leg(&d.coproduct(&gi, g, &y)?, 0, |u| d.antipode(u))?)?;
            let right = d.multiply_legs(&d.map_leg(&d.coproduct(g, &gi, &y)?, 1, |u| d.antipode(u))?)?;
            antipode &= left == want && right == want;
        }
        rep.push("counitality", counital);
        rep.push("antipode", antipode);
    }
    Ok(())
}

fn crossing_axioms(
    d: &TwistedDouble,
    gs: &[TwistedAutomorphism],
    s: &mut Sampler,
    rep: &mut AxiomReport,
) -> Result<(), DoubleError> {
    for b in gs {
        for a in gs {
            let mut ok = true;
            for t in s.tuples(2) {
                let (x, y) = (d.basis(a, t[0]), d.basis(a, t[1]));
                ok &= d.phi(b, &d.mul(&x, &y)?)? == d.mul(&d.phi(b, &x)?, &d.phi(b, &y)?)?;
            }
            rep.push("crossing is an algebra map", ok);
            let (mut counit, mut comp) = (true, true);
            for i in 0..d.dim() {
                let x = d.basis(a, i);
                counit &= d.counit(&d.phi(b, &x)?) == d.counit(&x);
                comp &= d.phi(a, &d.phi(b, &x)?)? == d.phi(&a.compose(b), &x)?;
            }
            rep.push("crossing preserves counit", counit);
            rep.push("crossing composition", comp);
            for c in gs {
                let mut ok = true;
                for i in 0..d.dim() {
                    let x = d.basis(&a.compose(c), i);
                    let lhs = d.coproduct(a, c, &x)?;
                    let lhs = d.map_leg(&d.map_leg(&lhs, 0, |u| d.phi(b, u))?, 1, |u| d.phi(b, u))?;
                    let rhs = d.coproduct(&a.conjugate_by(b)?, &c.conjugate_by(b)?, &d.phi(b, &x)?)?;
                    ok &= eq_tensor(&lhs, &rhs);
                }
                rep.push("crossing is a coalgebra map", ok);
            }
        }
    }
    Ok(())
}

fn quasitriangular_axioms(
    d: &TwistedDouble,
    gs: &[TwistedAutomorphism],
    rep: &mut AxiomReport,
) -> Result<(), DoubleError> {
    for a in gs {
        let ai = a.inverse()?;
        for b in gs {
            let r = d.r_matrix(a, b);
            let rb = d.r_matrix_inverse(a, b)?;
            let one = d.one_tensor(&[a.clone(), b.clone()]);
            rep.push(
                "R-matrix invertible",
                eq_tensor(&d.mul_tensor(&r, &rb)?, &one) && eq_tensor(&d.mul_tensor(&rb, &r)?, &one),
            );
            let ab = a.compose(b);
            let mut ok = true;
            for i in 0..d.dim() {
                let x = d.basis(&ab, i);
                let lhs = d.mul_tensor(&r, &d.coproduct(a, b, &x)?)?;
                let t = d.coproduct(&b.conjugate_by(a)?, a, &x)?;
                let t = d.flip(&d.map_leg(&t, 0, |u| d.phi(&ai, u))?);
                ok &= eq_tensor(&lhs, &d.mul_tensor(&t, &r)?);
            }
            rep.push("R-matrix intertwines coproducts", ok);
            for g in gs {
                let lhs = d.map_leg(&d.map_leg(&r, 0, |u| d.phi(g, u))?, 1, |u| d.phi(g, u))?;
                let rhs = d.r_matrix(&a.conjugate_by(g)?, &b.conjugate_by(g)?);
                rep.push("R-matrix is crossing invariant", eq_tensor(&lhs, &rhs));
            }
            for c in gs {
                let bc = b.compose(c);
                // (id⊗Δ_{b,c}) R_{a,bc} = (R_{a,c})_{1b3} (R_{a,b})_{12c}.
                let lhs = d.coproduct_leg(&d.r_matrix(a, &bc), 1, b, c)?;
                let rhs =
                    d.mul_tensor(&d.insert_unit(&d.r_matrix(a, c), 1, b), &d.insert_unit(&d.r_matrix(a, b), 2, c))?;
                rep.push("R-matrix second-leg coproduct", eq_tensor(&lhs, &rhs));
                // (Δ_{a,b}⊗id) R_{ab,c} = ((id⊗φ_{b⁻¹}) R_{a,bcb⁻¹})_{1b3} (R_{b,c})_{a23}.
                let bi = b.inverse()?;
                let lhs = d.coproduct_leg(&d.r_matrix(&ab, c), 0, a, b)?;
                let x = d.map_leg(&d.r_matrix(a, &c.conjugate_by(b)?), 1, |u| d.phi(&bi, u))?;
                let rhs = d.mul_tensor(&d.insert_unit(&x, 1, b), &d.insert_unit(&d.r_matrix(b, c), 0, a))?;
                rep.push("R-matrix first-leg coproduct", eq_tensor(&lhs, &rhs));
            }
        }
    }
    Ok(())
}

fn ribbon_axioms(
    rib: &RibbonData,
    all: &[TwistedAutomorphism],
    gs: &[TwistedAutomorphism],
    rep: &mut AxiomReport,
) -> Result<(), DoubleError> {
    let d = rib.double();
    let id = d.identity_grading();
    for g in all {
        let one = d.one(g);
        let u = rib.drinfeld(g)?;
        let ui = rib.drinfeld_inverse(g)?;
        rep.push("Drinfeld element invertible", d.mul(&u, &ui)? == one && d.mul(&ui, &u)? == one);
        rep.push("Drinfeld element independent of grading", u.coeffs == rib.drinfeld(&id)?.coeffs);
    }
    for g in gs {
        let one = d.one(g);
        let u = rib.drinfeld(g)?;
        let v = rib.ribbon(g)?;
        let vi = rib.ribbon_inverse(g)?;
        rep.push("ribbon element invertible", d.mul(&v, &vi)? == one && d.mul(&vi, &v)? == one);
        let mut central = true;
        for i in 0..d.dim() {
            let x = d.basis(g, i);
            central &= d.phi(g, &x)? == d.mul(&d.mul(&vi, &x)?, &v)?;
        }
        rep.push("ribbon twist implements crossing", central);
        let gi = g.inverse()?;
        if let Ok(vginv) = rib.ribbon(&gi) {
            rep.push("ribbon element and antipode", d.antipode(&v)? == vginv);
        }
        for b in gs {
            let conj = g.conjugate_by(b)?;
            if let Ok(vc) = rib.ribbon(&conj) {
                rep.push("ribbon element and crossing", d.phi(b, &v)? == vc);
            }
        }
        let p = rib.pivot(g)?;
        let pi = rib.pivot_inverse(g)?;
        rep.push("pivot equals vu", d.mul(&v, &u)? == p && d.mul(&u, &v)? == p);
        let mut pivotal = true;
        let mut lemma = true;
        let sr = rib.sqrt_r(g)?.inv_monomial()?;
        for i in 0..d.dim() {
            let x = d.basis(g, i);
            pivotal &= d.antipode(&d.antipode(&x)?)? == d.mul(&d.mul(&p, &x)?, &pi)?;
            lemma &= d.counit(&d.mul(&v, &x)?) == &sr * &d.counit(&x);
        }
        rep.push("pivot implements double antipode", pivotal);
        rep.push("counit of ribbon element times x", lemma);
    }
    for a in gs {
        for b in gs {
            let ab = a.compose(b);
            let Ok(vab) = rib.ribbon(&ab) else { continue };
            let ai = a.inverse()?;
            let lhs = d.coproduct(a, b, &vab)?;
            let x = d.flip(&d.map_leg(&d.r_matrix(&b.conjugate_by(a)?, a), 0, |u| d.phi(&ai, u))?);
            let vv = DoubleTensor::from_elements(&[&rib.ribbon(a)?, &rib.ribbon(b)?]);
            let rhs = d.mul_tensor(&d.mul_tensor(&vv, &x)?, &d.r_matrix(a, b))?;
            rep.push("ribbon element coproduct", eq_tensor(&lhs, &rhs));
        }
    }
    Ok(())
}

fn integral_axioms(rib: &RibbonData, gs: &[TwistedAutomorphism], rep: &mut AxiomReport) -> Result<(), DoubleError> {
    let d = rib.double();
    let n = d.base_dim();
    let ip = rib.integrals();
    // λ_D(h^p⊗h_a) = Λ_l(h^p)·λ_r(h_a).
    let lam = |i: usize| &ip.left_cointegral[i / n] * &ip.right_integral[i % n];
    let lam_of = |x: &DoubleElement| x.terms().fold(LaurentScalar::zero(), |acc, (i, c)| acc + c.scale(&lam(i)));
    for a in gs {
        for b in gs {
            let ab = a.compose(b);
            let gl = d.pure(a, &ip.zeta, &ip.g).scale(&rib.r(a)?.inv_monomial()?);
            let (mut integral, mut grouplike) = (true, true);
            for i in 0..d.dim() {
                let x = d.basis(&ab, i);
                let t = d.coproduct(a, b, &x)?;
                let mut left = DoubleElement::zero(b.clone(), d.dim());
                let mut right = DoubleElement::zero(a.clone(), d.dim());
                for (k, c) in t.terms() {
                    let l0 = lam(k[0]);
                    if !l0.is_zero() {
                        left.coeffs[k[1]] += c.scale(&l0);
                    }
                    let l1 = lam(k[1]);
                    if !l1.is_zero() {
                        right.coeffs[k[0]] += c.scale(&l1);
                    }
                }
                let lx = lam_of(&x);
                integral &= left == d.one(b).scale(&lx);
                grouplike &= right == gl.scale(&lx);
            }
            rep.push("integral of the double", integral);
            rep.push("distinguished group-like of the double", grouplike);
        }
    }
    Ok(())
}
