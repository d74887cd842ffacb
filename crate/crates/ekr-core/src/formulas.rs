//! Closed-form quantities as exact arbitrary-precision functions, all
//! cross-checkable against enumeration.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::count::fib_count;
use crate::error::{Error, Result};

/// Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n.
///
/// The signed `k` makes the r = 1 case of [`mainstar_size`] total without
/// special-casing.
pub fn binomial(n: usize, k: i64) -> BigUint {
    if k < 0 || k as usize > n {
        return BigUint::zero();
    }
    let k = k as usize;
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// Size of the largest r-star of a depth-two claw with n leaves (centred at
/// a leaf): C(n-1, r-1) 2^{r-1} + C(n-1, r-2).
pub fn mainstar_size(n: usize, r: usize) -> Result<BigUint> {
    if r == 0 || n < r {
        return Err(Error::InvalidArgument(format!(
            "mainstar_size needs 1 <= r <= n (got n={n}, r={r})"
        )));
    }
    let r_i = r as i64;
    Ok(binomial(n - 1, r_i - 1) * BigUint::from(2u32).pow(r as u32 - 1)
        + binomial(n - 1, r_i - 2))
}

/// Number of independent sets of n-1 disjoint (k,a)-claws that contain the
/// roots of at least b of the claws:
/// sum over i = b..n-1 of C(n-1, i) F(a-1)^{ik} F(a)^{(n-1-i)k}.
pub fn kaclaw_root_count(n: usize, k: usize, a: usize, b: usize) -> Result<BigUint> {
    if n == 0 || k == 0 || a == 0 {
        return Err(Error::InvalidArgument(
            "kaclaw_root_count needs n, k, a >= 1".into(),
        ));
    }
    if b > n - 1 {
        return Err(Error::InvalidArgument(format!(
            "b = {b} exceeds the number of claws {}",
            n - 1
        )));
    }
    let f_in = fib_count(a - 1);
    let f_out = fib_count(a);
    let mut sum = BigUint::zero();
    for i in b..n {
        sum += binomial(n - 1, i as i64)
            * f_in.pow((i * k) as u32)
            * f_out.pow(((n - 1 - i) * k) as u32);
    }
    Ok(sum)
}

/// The limit of I(x)/I(y) on T^{n,k,a} as k grows:
/// (F(a-1) + F(a-2)) / (2 F(a-2)), reduced.
pub fn limit_ratio(a: usize) -> Result<BigRational> {
    if a < 2 {
        return Err(Error::InvalidArgument(format!(
            "limit_ratio needs a >= 2 (got {a})"
        )));
    }
    let num: BigInt = (fib_count(a - 1) + fib_count(a - 2)).into();
    let den: BigInt = (BigUint::from(2u32) * fib_count(a - 2)).into();
    Ok(BigRational::new(num, den))
}

/// The classical intersecting-family bound C(n-1, r-1).
pub fn ekr_star_bound(n: usize, r: usize) -> Result<BigUint> {
    if r == 0 || n < r {
        return Err(Error::InvalidArgument(format!(
            "ekr_star_bound needs 1 <= r <= n (got n={n}, r={r})"
        )));
    }
    Ok(binomial(n - 1, r as i64 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10u32.into());
        assert_eq!(binomial(7, 0), 1u32.into());
        assert_eq!(binomial(3, -1), BigUint::zero());
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn mainstar_values() {
        assert_eq!(mainstar_size(3, 2).unwrap(), 5u32.into());
        assert_eq!(mainstar_size(3, 3).unwrap(), 6u32.into());
        assert_eq!(mainstar_size(2, 1).unwrap(), 1u32.into());
        assert!(mainstar_size(2, 3).is_err());
    }

    #[test]
    fn mainstar_matches_enumerated_leaf_star() {
        use crate::family::star_family;
        use crate::graph::Graph;
        for n in 1..=7 {
            let g = Graph::depth_two_claw(n).unwrap();
            let leaf = 2; // first leaf in canonical numbering
            for r in 1..=n {
                let fam = star_family(&g, leaf, r).unwrap();
                assert_eq!(
                    mainstar_size(n, r).unwrap(),
                    BigUint::from(fam.len()),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn kaclaw_values() {
        assert_eq!(kaclaw_root_count(2, 1, 1, 0).unwrap(), 3u32.into());
        assert_eq!(kaclaw_root_count(2, 1, 1, 1).unwrap(), 1u32.into());
        assert!(kaclaw_root_count(2, 1, 1, 2).is_err());
    }

    #[test]
    fn kaclaw_partition_is_exhaustive() {
        // b = 0 counts everything: equals the product formula (F(a-1)^k + ...)
        // via the disjoint-union total
        use crate::count::count_by_size;
        use crate::graph::Graph;
        for n in 2..=3usize {
            for k in 1..=3usize {
                for a in 1..=3usize {
                    // union of n-1 claws, built as one graph
                    let mut g = Graph::new((n - 1) * (k * a + 1)).unwrap();
                    for b in 0..n - 1 {
                        let base = b * (k * a + 1);
                        let claw = Graph::ka_claw(k, a).unwrap();
                        for (u, v) in claw.edges() {
                            g.add_edge(base + u, base + v).unwrap();
                        }
                    }
                    let total = count_by_size(&g).unwrap().total();
                    assert_eq!(kaclaw_root_count(n, k, a, 0).unwrap(), total);
                }
            }
        }
    }

    #[test]
    fn limit_values() {
        assert_eq!(
            limit_ratio(2).unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(
            limit_ratio(3).unwrap(),
            BigRational::new(5.into(), 4.into())
        );
        assert_eq!(
            limit_ratio(4).unwrap(),
            BigRational::new(4.into(), 3.into())
        );
        assert!(limit_ratio(1).is_err());
    }

    #[test]
    fn limit_exceeds_one() {
        for a in 2..40 {
            assert!(limit_ratio(a).unwrap() > BigRational::one(), "a={a}");
        }
    }

    #[test]
    fn ekr_bound_values() {
        assert_eq!(ekr_star_bound(4, 2).unwrap(), 3u32.into());
        assert_eq!(ekr_star_bound(5, 5).unwrap(), 1u32.into());
        // at n = 2r the bound is half of C(n, r)
        for r in 1..8usize {
            let n = 2 * r;
            let whole = binomial(n, r as i64);
            assert_eq!(
                ekr_star_bound(n, r).unwrap() * BigUint::from(2u32),
                whole
            );
        }
    }
}
