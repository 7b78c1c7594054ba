//! Integer-level polynomial gcd for one and two variables.
//!
//! The canonical gcd procedure: clear rational content, treat bivariate
//! polynomials as polynomials in lambda with coefficients in Z[q], split off
//! the lambda-content (a gcd of univariate polynomials), and run a primitive
//! pseudo-remainder sequence on the primitive parts. A cheap modular image
//! (coefficients mod a word-size prime, q specialized for the bivariate case)
//! certifies the common coprime case without running the exact sequence.
//!
//! All results are primitive over Z with a positive leading coefficient, so
//! the reduction used by `RatFunc` is deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense univariate polynomial over Z (index = power of q), trailing
/// coefficient nonzero unless empty.
pub(crate) type ZPoly = Vec<BigInt>;

/// Lambda-major bivariate polynomial over Z: index = power of lambda, entries
/// are q-polynomials; last entry nonzero unless empty.
pub(crate) type LPoly = Vec<ZPoly>;

const FILTER_PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];
const FILTER_POINTS: [u64; 4] = [2, 3, 5, 7];

/// Primes for the modular univariate gcd; the result is certified by trial
/// division, so the list only bounds how large reconstructed coefficients
/// can get before falling back to the primitive remainder sequence.
const CRT_PRIMES: [u64; 16] = [
    2_147_483_647,
    2_147_483_629,
    2_147_483_587,
    2_147_483_579,
    2_147_483_563,
    2_147_483_549,
    2_147_483_543,
    2_147_483_497,
    2_147_483_489,
    2_147_483_477,
    2_147_483_423,
    2_147_483_399,
    2_147_483_353,
    2_147_483_323,
    2_147_483_269,
    2_147_483_249,
];

pub(crate) fn ztrim(p: &mut ZPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn ltrim(p: &mut LPoly) {
    while p.last().map_or(false, |c| c.is_empty()) {
        p.pop();
    }
}

fn zdeg(p: &ZPoly) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

/// gcd of all coefficients; zero for the zero polynomial, otherwise positive.
pub(crate) fn zcontent(p: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

fn zscale_down(p: &ZPoly, d: &BigInt) -> ZPoly {
    p.iter().map(|c| c / d).collect()
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    let mut out = out;
    ztrim(&mut out);
    out
}

fn zscale(p: &ZPoly, c: &BigInt) -> ZPoly {
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|x| x * c).collect()
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, cb) in b.iter().enumerate() {
        out[i] -= cb;
    }
    ztrim(&mut out);
    out
}

/// Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b); the result
/// equals `lc(b)^k * a mod b` for some k >= 0.
fn zprem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = zdeg(b);
    let lc_b = b[db].clone();
    let mut r = a.clone();
    while !r.is_empty() && zdeg(&r) >= db {
        let dr = zdeg(&r);
        let lc_r = r[dr].clone();
        // r = lc_b * r - lc_r * q^(dr-db) * b
        let mut scaled = zscale(&r, &lc_b);
        let mut shifted = vec![BigInt::zero(); dr - db];
        shifted.extend(zscale(b, &lc_r));
        scaled = zsub(&scaled, &shifted);
        debug_assert!(scaled.len() < r.len() || scaled.is_empty() || zdeg(&scaled) < dr);
        r = scaled;
    }
    r
}

fn zprimitive_positive(p: &ZPoly) -> ZPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = zcontent(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    zscale_down(p, &c)
}

fn zp_reduce(p: &ZPoly, m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    let mut out: Vec<u64> = p
        .iter()
        .map(|c| {
            let r = c.mod_floor(&mb);
            r.to_u64().expect("residue fits in u64")
        })
        .collect();
    while out.last().map_or(false, |&c| c == 0) {
        out.pop();
    }
    out
}

fn modpow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Euclidean gcd in Z_p[x], returned monic.
fn zp_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    loop {
        if b.is_empty() {
            if let Some(&lc) = a.last() {
                let inv = modpow(lc, p - 2, p);
                for c in a.iter_mut() {
                    *c = ((*c as u128 * inv as u128) % p as u128) as u64;
                }
            }
            return a;
        }
        // a mod b
        let lc_inv = modpow(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() && !a.is_empty() {
            let shift = a.len() - b.len();
            let factor = ((*a.last().unwrap() as u128 * lc_inv as u128) % p as u128) as u64;
            for (i, &cb) in b.iter().enumerate() {
                let sub = (factor as u128 * cb as u128) % p as u128;
                let idx = i + shift;
                a[idx] = ((a[idx] as u128 + p as u128 - sub) % p as u128) as u64;
            }
            while a.last().map_or(false, |&c| c == 0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

fn zp_gcd_degree(a: Vec<u64>, b: Vec<u64>, p: u64) -> usize {
    zp_gcd(a, b, p).len().saturating_sub(1)
}

/// True if the primitive parts of a and b are certified coprime by a modular
/// image. False means "unknown" and the exact sequence must run.
fn zcoprime_filter(a: &ZPoly, b: &ZPoly) -> bool {
    for &p in &FILTER_PRIMES {
        let ia = zp_reduce(a, p);
        let ib = zp_reduce(b, p);
        // the leading coefficient of a or b must survive the reduction
        if ia.len() == a.len() || ib.len() == b.len() {
            return zp_gcd_degree(ia, ib, p) == 0;
        }
    }
    false
}

/// Full gcd over Z[q] (integer content included), primitive-positive.
pub(crate) fn zgcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() {
        return zprimitive_positive(b);
    }
    if b.is_empty() {
        return zprimitive_positive(a);
    }
    let ca = zcontent(a);
    let cb = zcontent(b);
    let c = ca.gcd(&cb);
    let pa = zscale_down(a, &ca);
    let pb = zscale_down(b, &cb);
    let pp = if zdeg(&pa) == 0 || zdeg(&pb) == 0 || zcoprime_filter(&pa, &pb) {
        vec![BigInt::one()]
    } else {
        zgcd_modular(&pa, &pb).unwrap_or_else(|| zgcd_prs(pa, pb))
    };
    zscale(&pp, &c)
}

/// Modular gcd of primitive inputs: reconstruct the gcd from images mod
/// word-size primes by CRT (with the leading coefficient pinned to
/// `gcd(lc a, lc b)`), certify by exact trial division, and give up (`None`)
/// only if the prime budget runs out.
fn zgcd_modular(pa: &ZPoly, pb: &ZPoly) -> Option<ZPoly> {
    let glc = pa.last().unwrap().gcd(pb.last().unwrap());
    let mut modulus = BigInt::one();
    let mut accum: Vec<BigInt> = Vec::new();
    let mut cur_deg = usize::MAX;
    for &p in &CRT_PRIMES {
        let pb_big = BigInt::from(p);
        let ia = zp_reduce(pa, p);
        let ib = zp_reduce(pb, p);
        if ia.len() != pa.len() || ib.len() != pb.len() {
            continue; // p divides a leading coefficient
        }
        let mut g = zp_gcd(ia, ib, p);
        if g.len() == 1 {
            return Some(vec![BigInt::one()]);
        }
        // normalize the image to leading coefficient glc mod p
        let glc_mod = glc.mod_floor(&pb_big).to_u64().expect("fits");
        if glc_mod == 0 {
            continue;
        }
        for c in g.iter_mut() {
            *c = ((*c as u128 * glc_mod as u128) % p as u128) as u64;
        }
        let deg = g.len() - 1;
        if deg < cur_deg {
            // previous primes were unlucky (too-large image degree)
            cur_deg = deg;
            modulus = pb_big.clone();
            accum = g.iter().map(|&c| symmetric(c, p)).collect();
        } else if deg > cur_deg {
            continue; // this prime is unlucky
        } else {
            // CRT-combine into the accumulator
            let inv = mod_inverse(&modulus, p)?;
            let new_modulus = &modulus * &pb_big;
            for (acc, &img) in accum.iter_mut().zip(&g) {
                let cur_mod_p = acc.mod_floor(&pb_big).to_u64().expect("fits");
                let delta = ((img as u128 + p as u128 - cur_mod_p as u128) % p as u128) as u64;
                let t = ((delta as u128 * inv as u128) % p as u128) as u64;
                *acc += &modulus * BigInt::from(t);
                // symmetric representative mod new modulus
                let half = &new_modulus >> 1;
                if &*acc > &half {
                    *acc -= &new_modulus;
                }
            }
            modulus = new_modulus;
        }
        let mut candidate = accum.clone();
        ztrim(&mut candidate);
        if candidate.is_empty() || candidate.len() - 1 != cur_deg {
            continue;
        }
        let candidate = zprimitive_positive(&candidate);
        if zdivexact(pa, &candidate).is_some() && zdivexact(pb, &candidate).is_some() {
            return Some(candidate);
        }
    }
    None
}

fn symmetric(c: u64, p: u64) -> BigInt {
    if c > p / 2 {
        BigInt::from(c) - BigInt::from(p)
    } else {
        BigInt::from(c)
    }
}

/// Inverse of `m mod p` for prime p (None when p divides m).
fn mod_inverse(m: &BigInt, p: u64) -> Option<u64> {
    let r = m.mod_floor(&BigInt::from(p)).to_u64().expect("fits");
    if r == 0 {
        None
    } else {
        Some(modpow(r, p - 2, p))
    }
}

/// Primitive pseudo-remainder sequence on primitive inputs of degree >= 1;
/// correct for any input, used as the fallback when the modular route runs
/// out of primes.
fn zgcd_prs(mut a: ZPoly, mut b: ZPoly) -> ZPoly {
    if zdeg(&a) < zdeg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = zprem(&a, &b);
        if r.is_empty() {
            return zprimitive_positive(&b);
        }
        if zdeg(&r) == 0 {
            return vec![BigInt::one()];
        }
        a = b;
        b = zprimitive_positive(&r);
    }
}

// ---------------------------------------------------------------------------
// bivariate (lambda-major over Z[q])
// ---------------------------------------------------------------------------

fn ldeg(p: &LPoly) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

/// Content with respect to lambda: gcd in Z[q] of all coefficients.
fn lcontent(p: &LPoly) -> ZPoly {
    let mut g: ZPoly = Vec::new();
    for c in p {
        if !c.is_empty() {
            g = zgcd(&g, c);
            if g.len() == 1 && g[0].is_one() {
                break;
            }
        }
    }
    g
}

fn ldivide_content(p: &LPoly, c: &ZPoly) -> LPoly {
    if c.len() == 1 && c[0].is_one() {
        return p.clone();
    }
    p.iter()
        .map(|coef| {
            if coef.is_empty() {
                Vec::new()
            } else {
                zdivexact(coef, c).expect("content divides")
            }
        })
        .collect()
}

/// Exact division in Z[q]; None if not exact.
pub(crate) fn zdivexact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = zdeg(b);
    let lc_b = &b[db];
    let mut r = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    while !r.is_empty() && zdeg(&r) >= db {
        let dr = zdeg(&r);
        let (q, rem) = r[dr].div_rem(lc_b);
        if !rem.is_zero() {
            return None;
        }
        quot[dr - db] = q.clone();
        let mut shifted = vec![BigInt::zero(); dr - db];
        shifted.extend(zscale(b, &q));
        r = zsub(&r, &shifted);
        if !r.is_empty() && zdeg(&r) >= dr {
            return None;
        }
    }
    if r.is_empty() {
        ztrim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

fn lscale_zpoly(p: &LPoly, c: &ZPoly) -> LPoly {
    p.iter()
        .map(|coef| if coef.is_empty() { Vec::new() } else { zmul(coef, c) })
        .collect()
}

fn lsub(a: &LPoly, b: &LPoly) -> LPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), Vec::new());
    }
    for (i, cb) in b.iter().enumerate() {
        out[i] = zsub(&out[i], cb);
    }
    ltrim(&mut out);
    out
}

/// Pseudo-remainder in lambda with coefficients in Z[q].
fn lprem(a: &LPoly, b: &LPoly) -> LPoly {
    let db = ldeg(b);
    let lc_b = b[db].clone();
    let mut r = a.clone();
    while !r.is_empty() && ldeg(&r) >= db {
        let dr = ldeg(&r);
        let lc_r = r[dr].clone();
        let scaled = lscale_zpoly(&r, &lc_b);
        let mut shifted: LPoly = vec![Vec::new(); dr - db];
        shifted.extend(lscale_zpoly(b, &lc_r));
        r = lsub(&scaled, &shifted);
        debug_assert!(r.is_empty() || ldeg(&r) < dr);
    }
    r
}

fn lprimitive(p: &LPoly) -> LPoly {
    let c = lcontent(p);
    ldivide_content(p, &c)
}

/// Modular coprimality certificate for lambda-primitive polys: evaluate q at
/// a point mod p and run a Z_p[lambda] gcd. Degree 0 proves the gcd is 1.
fn lcoprime_filter(a: &LPoly, b: &LPoly) -> bool {
    for &p in &FILTER_PRIMES {
        for &pt in &FILTER_POINTS {
            let ia = lp_eval_mod(a, pt, p);
            let ib = lp_eval_mod(b, pt, p);
            if ia.len() == a.len() || ib.len() == b.len() {
                return zp_gcd_degree(ia, ib, p) == 0;
            }
        }
    }
    false
}

fn lp_eval_mod(p: &LPoly, pt: u64, m: u64) -> Vec<u64> {
    let mut out: Vec<u64> = p
        .iter()
        .map(|coef| {
            // Horner in q at pt, mod m
            let mut acc: u64 = 0;
            for c in coef.iter().rev() {
                let r = c.mod_floor(&BigInt::from(m)).to_u64().unwrap();
                acc = ((acc as u128 * pt as u128 + r as u128) % m as u128) as u64;
            }
            acc
        })
        .collect();
    while out.last().map_or(false, |&c| c == 0) {
        out.pop();
    }
    out
}

/// Leading coefficient sign in graded-lex order (q before lambda).
fn lleading_sign(p: &LPoly) -> i8 {
    let mut best: Option<(u64, u64, &BigInt)> = None;
    for (dl, coef) in p.iter().enumerate() {
        for (dq, c) in coef.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let key = ((dq + dl) as u64, dq as u64);
            if best.map_or(true, |(t, q, _)| key > (t, q)) {
                best = Some((key.0, key.1, c));
            }
        }
    }
    match best {
        Some((_, _, c)) if c.is_negative() => -1,
        Some(_) => 1,
        None => 0,
    }
}

fn lneg(p: &LPoly) -> LPoly {
    p.iter()
        .map(|coef| coef.iter().map(|c| -c).collect())
        .collect()
}

/// Full gcd over Z[q, lambda], primitive over Z with positive graded-lex
/// leading coefficient.
pub(crate) fn lgcd(a: &LPoly, b: &LPoly) -> LPoly {
    if a.is_empty() {
        return lnormalize(b.clone());
    }
    if b.is_empty() {
        return lnormalize(a.clone());
    }
    let ca = lcontent(a);
    let cb = lcontent(b);
    let cg = zgcd(&ca, &cb);
    let pa = ldivide_content(a, &ca);
    let pb = ldivide_content(b, &cb);
    let pp = if ldeg(&pa) == 0 || ldeg(&pb) == 0 || lcoprime_filter(&pa, &pb) {
        vec![vec![BigInt::one()]]
    } else {
        lgcd_prs(pa, pb)
    };
    lnormalize(lscale_zpoly(&pp, &cg))
}

fn lgcd_prs(mut a: LPoly, mut b: LPoly) -> LPoly {
    if ldeg(&a) < ldeg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = lprem(&a, &b);
        if r.is_empty() {
            return lprimitive(&b);
        }
        if ldeg(&r) == 0 {
            return vec![vec![BigInt::one()]];
        }
        a = b;
        b = lprimitive(&r);
    }
}

/// Integer-content and sign normalization only; the polynomial content is
/// part of the gcd and must stay.
fn lnormalize(p: LPoly) -> LPoly {
    if p.is_empty() {
        return p;
    }
    let mut content = BigInt::zero();
    'outer: for row in &p {
        for c in row {
            if !c.is_zero() {
                content = content.gcd(c);
                if content.is_one() {
                    break 'outer;
                }
            }
        }
    }
    let scaled: LPoly = if content.is_one() {
        p
    } else {
        p.iter()
            .map(|row| row.iter().map(|c| c / &content).collect())
            .collect()
    };
    if lleading_sign(&scaled) < 0 {
        lneg(&scaled)
    } else {
        scaled
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        let mut p: ZPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        ztrim(&mut p);
        p
    }

    #[test]
    fn univariate_gcd_with_content() {
        // gcd(2(q+1)(q-1), 4(q-1)) = 2(q-1)
        let a = zmul(&z(&[2, 2]), &z(&[-1, 1]));
        let b = zscale(&z(&[-1, 1]), &BigInt::from(4));
        assert_eq!(zgcd(&a, &b), z(&[-2, 2]));
    }

    #[test]
    fn univariate_coprime() {
        let a = z(&[1, 1]); // q+1
        let b = z(&[1, 0, 1]); // q^2+1
        assert_eq!(zgcd(&a, &b), z(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = zmul(&z(&[1, 2, 1]), &z(&[3, -1]));
        assert_eq!(zdivexact(&a, &z(&[1, 2, 1])), Some(z(&[3, -1])));
        assert_eq!(zdivexact(&z(&[1, 1]), &z(&[1, 0, 1])), None);
        assert_eq!(zdivexact(&z(&[1, 2]), &z(&[1, 1])), None);
    }

    #[test]
    fn bivariate_gcd_shared_factor() {
        // a = (1-lambda) * q, b = (1-lambda)^2 lambda-major over Z[q]
        let one_minus_lambda: LPoly = vec![z(&[1]), z(&[-1])];
        let a: LPoly = vec![z(&[0, 1]), z(&[0, -1])];
        let b: LPoly = vec![z(&[1]), z(&[-2]), z(&[1])];
        let g = lgcd(&a, &b);
        // canonical sign: positive graded-lex leading coefficient => lambda - 1
        assert_eq!(g, vec![z(&[-1]), z(&[1])]);
        let _ = one_minus_lambda;
    }

    #[test]
    fn bivariate_coprime() {
        // q + lambda and q*lambda + 1 share no factor
        let a: LPoly = vec![z(&[0, 1]), z(&[1])];
        let b: LPoly = vec![z(&[1]), z(&[0, 1])];
        assert_eq!(lgcd(&a, &b), vec![z(&[1])]);
    }
}
