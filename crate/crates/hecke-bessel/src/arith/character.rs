use crate::error::{domain, Result};
use num::complex::Complex64;
use num::integer::{gcd, lcm};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A Dirichlet character mod q with values e^{2πi e(n)/order}, stored exactly by exponent.
#[derive(Clone, Debug, PartialEq)]
pub struct DirichletCharacter {
    pub modulus: u64,
    /// Position in the enumeration of all characters mod q.
    pub index: usize,
    /// Common denominator of the value exponents.
    pub order: u64,
    /// `exponents[n]` for 0 ≤ n < q; `None` where gcd(n, q) > 1.
    pub exponents: Vec<Option<u64>>,
    pub parity: Parity,
    pub primitive: bool,
}

impl DirichletCharacter {
    pub fn value(&self, n: u64) -> Complex64 {
        match self.exponents[(n % self.modulus) as usize] {
            None => Complex64::new(0.0, 0.0),
            Some(e) => root_of_unity(e, self.order),
        }
    }

    pub fn conj_value(&self, n: u64) -> Complex64 {
        self.value(n).conj()
    }

    /// True when every value is ±1 or 0.
    pub fn is_real(&self) -> bool {
        self.exponents.iter().flatten().all(|&e| (2 * e) % self.order == 0)
    }
}

fn root_of_unity(e: u64, order: u64) -> Complex64 {
    let e = e % order;
    // exact values at the quarter turns
    if 4 * e % order == 0 {
        return match 4 * e / order {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * PI * e as f64 / order as f64)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A cyclic factor of (ℤ/qℤ)*: discrete log of each residue mod q (None if not a unit).
struct CyclicFactor {
    order: u64,
    log: Vec<Option<u64>>,
}

/// Cyclic components of (ℤ/qℤ)* via the prime-power decomposition.
fn cyclic_factors(q: u64) -> Vec<CyclicFactor> {
    let mut out = Vec::new();
    for (p, e) in factor(q) {
        let pe = p.pow(e);
        let mut gens: Vec<(u64, u64)> = Vec::new();
        if p == 2 {
            if e >= 2 {
                gens.push((pe - 1, 2));
            }
            if e >= 3 {
                gens.push((5, pe / 4));
            }
        } else {
            let phi = pe / p * (p - 1);
            let g = (2..pe)
                .find(|&g| gcd(g, p) == 1 && factor(phi).iter().all(|&(r, _)| pow_mod(g, phi / r, pe) != 1))
                .expect("odd prime powers have primitive roots");
            gens.push((g, phi));
        }
        // discrete logs on ℤ/p^e, jointly over the generators
        let mut joint: Vec<Option<Vec<u64>>> = vec![None; pe as usize];
        let mut stack = vec![(1u64, vec![0u64; gens.len()])];
        joint[1 % pe as usize] = Some(vec![0; gens.len()]);
        while let Some((x, exps)) = stack.pop() {
            for (i, &(g, ord)) in gens.iter().enumerate() {
                let y = x * g % pe;
                if joint[y as usize].is_none() {
                    let mut ex = exps.clone();
                    ex[i] = (ex[i] + 1) % ord;
                    joint[y as usize] = Some(ex.clone());
                    stack.push((y, ex));
                }
            }
        }
        for (i, &(_, ord)) in gens.iter().enumerate() {
            let log = (0..q)
                .map(|n| if gcd(n, q) == 1 { joint[(n % pe) as usize].as_ref().map(|v| v[i]) } else { None })
                .collect();
            out.push(CyclicFactor { order: ord, log });
        }
    }
    out
}

/// Every character mod q, ordered lexicographically by their exponent tuples.
pub fn all_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    if q < 1 {
        return domain("character modulus must be positive");
    }
    let factors = cyclic_factors(q);
    let order = factors.iter().fold(1u64, |acc, f| lcm(acc, f.order));
    let count: u64 = factors.iter().map(|f| f.order).product();
    let mut out = Vec::with_capacity(count as usize);
    for index in 0..count {
        let mut digits = Vec::with_capacity(factors.len());
        let mut rest = index;
        for f in factors.iter().rev() {
            digits.push(rest % f.order);
            rest /= f.order;
        }
        digits.reverse();
        let exponents: Vec<Option<u64>> = (0..q)
            .map(|n| {
                if gcd(n, q) != 1 {
                    return None;
                }
                let mut e = 0;
                for (f, &j) in factors.iter().zip(&digits) {
                    e += j * f.log[n as usize].unwrap() * (order / f.order);
                }
                Some(e % order)
            })
            .collect();
        let minus_one = exponents[(q - 1) as usize].unwrap_or(0);
        let parity = if minus_one == 0 { Parity::Even } else { Parity::Odd };
        let primitive = is_primitive(q, &exponents);
        out.push(DirichletCharacter { modulus: q, index: index as usize, order, exponents, parity, primitive });
    }
    Ok(out)
}

/// χ is induced from modulus q/p iff it is trivial on units ≡ 1 mod q/p.
fn is_primitive(q: u64, exponents: &[Option<u64>]) -> bool {
    factor(q).iter().all(|&(p, _)| {
        let d = q / p;
        (0..q).any(|n| n % d == 1 % d && matches!(exponents[n as usize], Some(e) if e != 0))
    })
}

/// Primitive characters mod q for 3 ≤ q ≤ 100.
pub fn primitive_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    if !(3..=100).contains(&q) {
        return domain(format!("modulus must satisfy 3 ≤ q ≤ 100, got {q}"));
    }
    Ok(all_characters(q)?.into_iter().filter(|c| c.primitive).collect())
}

/// τ(χ) = Σ_{n=1}^{q} χ(n) e^{2πin/q}.
pub fn gauss_sum(chi: &DirichletCharacter) -> Result<Complex64> {
    if !chi.primitive {
        return domain(format!("Gauss sum requested for an imprimitive character mod {}", chi.modulus));
    }
    let q = chi.modulus;
    Ok((1..=q)
        .map(|n| chi.value(n) * root_of_unity(n % q, q))
        .sum())
}

/// Kronecker symbol (m/n) for n ≥ 1.
pub fn kronecker(m: i64, n: u64) -> i32 {
    assert!(n >= 1, "kronecker symbol needs n ≥ 1");
    let mut n = n;
    let mut result = 1;
    let twos = n.trailing_zeros();
    if twos > 0 {
        if m % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 && matches!(m.rem_euclid(8), 3 | 5) {
            result = -result;
        }
        n >>= twos;
    }
    // Jacobi symbol (m/n), n odd
    let mut a = m.rem_euclid(n as i64) as u64;
    while a != 0 {
        let t = a.trailing_zeros();
        a >>= t;
        if t % 2 == 1 && matches!(n % 8, 3 | 5) {
            result = -result;
        }
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(-4, 5), 1);
        assert_eq!(kronecker(-4, 2), 0);
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(7, 1), 1);
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(5, 8), -1);
    }

    #[test]
    fn modulus_four() {
        let p = primitive_characters(4).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].parity, Parity::Odd);
        assert_eq!(p[0].value(3), Complex64::new(-1.0, 0.0));
        let g = gauss_sum(&p[0]).unwrap();
        assert!((g - Complex64::new(0.0, 2.0)).norm() < 1e-14);
    }

    #[test]
    fn modulus_one_and_two() {
        assert_eq!(all_characters(1).unwrap().len(), 1);
        assert_eq!(all_characters(2).unwrap().len(), 1);
        assert!(primitive_characters(2).is_err());
    }
}
