use crate::error::{domain, Result};

/// Constants of the imaginary quadratic field with discriminant −D.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldConstants {
    pub disc_abs: u64,
    pub class_number: u64,
    pub roots_of_unity: u64,
    /// Always 1 for imaginary quadratic fields.
    pub regulator: u64,
}

fn squarefree(n: u64) -> bool {
    let mut p = 2;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Whether −D is a fundamental discriminant.
pub fn is_fundamental(d: u64) -> bool {
    if d < 3 {
        return false;
    }
    // −D ≡ 1 mod 4  ⇔  D ≡ 3 mod 4
    if d % 4 == 3 {
        return squarefree(d);
    }
    if d % 4 == 0 {
        let m = d / 4;
        // −m ≡ 2, 3 mod 4  ⇔  m ≡ 2, 1 mod 4
        return matches!(m % 4, 1 | 2) && squarefree(m);
    }
    false
}

pub(crate) fn require_fundamental(d: u64) -> Result<()> {
    if is_fundamental(d) {
        Ok(())
    } else {
        domain(format!("−{d} is not a fundamental discriminant"))
    }
}

/// Class number by counting reduced primitive forms (a, b, c) with b² − 4ac = −D.
pub fn field_constants(d: u64) -> Result<FieldConstants> {
    require_fundamental(d)?;
    let d = d as i64;
    let mut h = 0;
    let mut a = 1i64;
    while 3 * a * a <= d {
        for b in -a + 1..=a {
            let num = b * b + d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if num::integer::gcd(num::integer::gcd(a, b.abs()), c) == 1 {
                h += 1;
            }
        }
        a += 1;
    }
    let w = match d {
        3 => 6,
        4 => 4,
        _ => 2,
    };
    Ok(FieldConstants { disc_abs: d as u64, class_number: h, roots_of_unity: w, regulator: 1 })
}
