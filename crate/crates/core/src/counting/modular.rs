//! Polynomial arithmetic over word-sized prime fields: gcd degree bounds and a
//! multi-prime gcd with Chinese remaindering.

use std::sync::OnceLock;

use super::poly::Polynomial;
use crate::scalar::Coefficient;

const PRIMES: [u64; 4] = [
    2_305_843_009_213_693_951, // 2^61 - 1
    4_611_686_018_427_387_847,
    1_000_000_000_000_000_003,
    998_244_353,
];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `a mod b` in place over `F_p`; `b` must be trimmed and nonzero.
fn rem_in_place(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = pow_mod(b[db], p - 2, p);
    trim(a);
    while a.len() > db {
        let top = a.len() - 1;
        let factor = mul_mod(a[top], inv, p);
        let shift = top - db;
        if factor != 0 {
            for (j, &bj) in b.iter().enumerate() {
                let sub = mul_mod(factor, bj, p);
                let x = a[shift + j];
                a[shift + j] = if x >= sub { x - sub } else { x + p - sub };
            }
        }
        a.pop();
        trim(a);
    }
}

/// Degree of `gcd(a, b) mod p` for a prime dividing neither leading coefficient.
/// This bounds the degree of the integer gcd from above.
pub(crate) fn gcd_degree_bound<T: Coefficient>(
    a: &Polynomial<T>,
    b: &Polynomial<T>,
) -> Option<usize> {
    let la = a.leading()?;
    let lb = b.leading()?;
    let p = *PRIMES
        .iter()
        .find(|&&p| la.residue(p) != 0 && lb.residue(p) != 0)?;
    let mut x = a.residues(p);
    let mut y = b.residues(p);
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        rem_in_place(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    x.len().checked_sub(1)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, largest first.
fn large_primes() -> &'static [u64] {
    static CACHE: OnceLock<Vec<u64>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = Vec::with_capacity(256);
        let mut n = (1u64 << 62) - 1;
        while out.len() < 256 {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

/// Monic gcd over `F_p` of two trimmed, nonzero residue vectors.
fn gcd_mod(mut x: Vec<u64>, mut y: Vec<u64>, p: u64) -> Vec<u64> {
    while !y.is_empty() {
        rem_in_place(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    let inv = pow_mod(*x.last().expect("nonzero input"), p - 2, p);
    x.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

/// Gcd of two primitive polynomials by reduction modulo many primes, Chinese
/// remaindering of the images scaled to `gcd(lc(a), lc(b))`, and trial
/// division once the lifted candidate stops changing. Returns the primitive
/// gcd with positive leading coefficient, or `None` when the coefficient type
/// cannot hold the intermediate moduli or the primes run out.
pub(crate) fn modular_gcd<T: Coefficient>(a: &Polynomial<T>, b: &Polynomial<T>) -> Option<Polynomial<T>> {
    // fixed-width integers would overflow the running modulus
    T::from_f64(1e300)?;
    let la = a.leading()?;
    let lb = b.leading()?;
    let g = la.gcd(lb);
    let mut best = usize::MAX;
    let mut modulus = T::one();
    let mut image: Vec<T> = Vec::new();
    let mut previous: Option<Polynomial<T>> = None;
    for &p in large_primes() {
        if la.residue(p) == 0 || lb.residue(p) == 0 {
            continue;
        }
        let mut x = a.residues(p);
        let mut y = b.residues(p);
        trim(&mut x);
        trim(&mut y);
        let gp = gcd_mod(x, y, p);
        let d = gp.len() - 1;
        if d == 0 {
            return Some(Polynomial::one());
        }
        if d > best {
            continue; // p divides a resultant: unlucky prime
        }
        let scale = g.residue(p);
        let gp: Vec<u64> = gp.iter().map(|&c| mul_mod(c, scale, p)).collect();
        let pt = T::from_u64(p)?;
        if d < best {
            best = d;
            modulus = pt;
            image = gp.iter().map(|&c| T::from_u64(c).expect("fits")).collect();
        } else {
            let inv = pow_mod(modulus.residue(p), p - 2, p);
            for (h, &c) in image.iter_mut().zip(&gp) {
                let diff = (c + p - h.residue(p)) % p;
                let step = mul_mod(diff, inv, p);
                if step != 0 {
                    h.add_mul(&modulus, &T::from_u64(step).expect("fits"));
                }
            }
            modulus = modulus.mul_ref(&pt);
        }
        let half = modulus.div_floor(&T::from_u8(2).expect("fits"));
        let lifted: Vec<T> = image
            .iter()
            .map(|h| if *h > half { h.sub_ref(&modulus) } else { h.clone() })
            .collect();
        let candidate = Polynomial::new(lifted).primitive_part();
        if previous.as_ref() == Some(&candidate)
            && a.div_exact(&candidate).is_some()
            && b.div_exact(&candidate).is_some()
        {
            return Some(candidate);
        }
        previous = Some(candidate);
    }
    None
}
