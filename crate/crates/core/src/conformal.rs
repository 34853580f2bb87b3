//! Evaluation of conformal multilinear maps given on basis tuples.
//!
//! A p-ary map `f_{λ1..λ(p-1)}(x1, .., xp)` is stored by its values on basis
//! tuples as vectors in the free variables `λ1..λ(p-1)` (and `d`). The value
//! on arbitrary `C[∂]`-combinations follows from conformal sesquilinearity:
//! a coefficient `q(∂)` on the k-th argument turns into `q(-λk)`, where the
//! last slot carries the dependent parameter `λp = -(λ1 + .. + λ(p-1)) - ∂`.
//!
//! Slot parameters may themselves mention `d`; that `d` is always the
//! translation operator of the output.

use crate::poly::{MultiPoly, PolyVector, Var};

/// The dependent parameter `-(λ1 + .. + λk) - d`.
pub fn dependent_lambda(lams: &[MultiPoly]) -> MultiPoly {
    let mut acc = -MultiPoly::d();
    for l in lams {
        acc -= l;
    }
    acc
}

/// Evaluates a p-ary conformal map.
///
/// `entry(tuple)` returns the stored value on a basis tuple; its free
/// parameters are `lam_vars` (length `p - 1`), which get replaced by `lams`
/// simultaneously. `args` are the argument coordinate vectors.
pub fn apply_conformal<'a, F>(
    entry: F,
    lam_vars: &[Var],
    out_rank: usize,
    args: &[&PolyVector],
    lams: &[MultiPoly],
) -> PolyVector
where
    F: Fn(&[usize]) -> &'a PolyVector,
{
    let p = args.len();
    assert!(p >= 1, "conformal map of arity zero");
    assert_eq!(lams.len(), p - 1, "expected {} slot parameters", p - 1);
    assert_eq!(lam_vars.len(), p - 1, "expected {} free variables", p - 1);

    // shifted coordinates per argument: q(d) -> q(-λk)
    let last_shift = &MultiPoly::d() + &lams.iter().cloned().sum::<MultiPoly>();
    let shifted: Vec<Vec<(usize, MultiPoly)>> = args
        .iter()
        .enumerate()
        .map(|(k, arg)| {
            let value = if k + 1 == p {
                last_shift.clone()
            } else {
                -&lams[k]
            };
            arg.entries()
                .iter()
                .enumerate()
                .filter(|(_, q)| !q.is_zero())
                .map(|(i, q)| (i, q.substitute(Var::D, &value)))
                .collect()
        })
        .collect();

    let subst: Vec<(Var, MultiPoly)> = lam_vars.iter().copied().zip(lams.iter().cloned()).collect();
    let mut out = PolyVector::zero(out_rank);
    if shifted.iter().any(Vec::is_empty) {
        return out;
    }
    let mut cursor = vec![0usize; p];
    let mut tuple = vec![0usize; p];
    loop {
        let mut coef = MultiPoly::one();
        for k in 0..p {
            let (i, q) = &shifted[k][cursor[k]];
            tuple[k] = *i;
            coef = &coef * q;
        }
        let value = entry(&tuple);
        if !value.is_zero() {
            out.add_scaled(&coef, &value.substitute_all(&subst));
        }
        // odometer
        let mut k = p;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cursor[k] += 1;
            if cursor[k] < shifted[k].len() {
                break;
            }
            cursor[k] = 0;
        }
    }
}

/// Iterates all tuples in `ranks[0] x .. x ranks[p-1]` in lexicographic
/// order.
pub fn tuples(ranks: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &r in ranks {
        let mut next = Vec::with_capacity(out.len() * r);
        for t in &out {
            for i in 0..r {
                let mut t2 = t.clone();
                t2.push(i);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}
