//! Univariate factorization over the rationals.
//!
//! Classical Zassenhaus: reduce to a primitive squarefree integer polynomial,
//! factor modulo a small good prime with Berlekamp's algorithm, lift the
//! modular factorization by quadratic Hensel steps past the Landau–Mignotte
//! bound, and recombine modular factors by subset search. Degrees in this
//! crate's workload stay small (tangent cones, Newton polygon edges, norms of
//! tower generators), so the subset search is not a bottleneck.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Int, QUniPoly, Rat};

// ---------------------------------------------------------------------------
// dense integer polynomials (ascending coefficients)
// ---------------------------------------------------------------------------

type ZPoly = Vec<Int>;

fn ztrim(mut p: ZPoly) -> ZPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn zdeg(p: &ZPoly) -> usize {
    p.len().saturating_sub(1)
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

fn zcontent(p: &ZPoly) -> Int {
    let mut g = Int::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

fn zprimitive(p: &ZPoly) -> ZPoly {
    let c = zcontent(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Exact division test in Z[x]; returns the quotient when it divides.
fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.is_empty() {
        return None;
    }
    let mut rem = a.clone();
    let db = zdeg(b);
    let lcb = b.last().unwrap().clone();
    let mut quot = vec![Int::zero(); a.len() - b.len() + 1];
    while !rem.is_empty() && zdeg(&rem) >= db {
        let lcr = rem.last().unwrap();
        let (q, r) = lcr.div_rem(&lcb);
        if !r.is_zero() {
            return None;
        }
        let shift = zdeg(&rem) - db;
        quot[shift] = q.clone();
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= c * &q;
        }
        rem = ztrim(rem);
    }
    if rem.is_empty() {
        Some(ztrim(quot))
    } else {
        None
    }
}

fn max_abs_coeff(p: &ZPoly) -> Int {
    p.iter().map(|c| c.abs()).max().unwrap_or_else(Int::zero)
}

// ---------------------------------------------------------------------------
// arithmetic mod a small prime
// ---------------------------------------------------------------------------

type PPoly = Vec<i64>;

fn ptrim(mut p: PPoly) -> PPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn pmod(a: i64, p: i64) -> i64 {
    a.rem_euclid(p)
}

fn pinv(a: i64, p: i64) -> i64 {
    // extended euclid
    let (mut t, mut newt) = (0i64, 1i64);
    let (mut r, mut newr) = (p, pmod(a, p));
    while newr != 0 {
        let q = r / newr;
        (t, newt) = (newt, t - q * newt);
        (r, newr) = (newr, r - q * newr);
    }
    assert!(r == 1, "not invertible mod p");
    pmod(t, p)
}

fn pmul(a: &PPoly, b: &PPoly, p: i64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = pmod(out[i + j] + x * y, p);
        }
    }
    ptrim(out)
}

fn psub(a: &PPoly, b: &PPoly, p: i64) -> PPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0i64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = pmod(x - y, p);
    }
    ptrim(out)
}

fn pscale(a: &PPoly, c: i64, p: i64) -> PPoly {
    ptrim(a.iter().map(|&x| pmod(x * c, p)).collect())
}

fn pdiv_rem(a: &PPoly, b: &PPoly, p: i64) -> (PPoly, PPoly) {
    assert!(!b.is_empty());
    let db = b.len() - 1;
    let inv_lc = pinv(*b.last().unwrap(), p);
    let mut rem = a.clone();
    let mut quot = vec![0i64; a.len().saturating_sub(db)];
    while rem.len() > db {
        let c = pmod(rem.last().unwrap() * inv_lc, p);
        let shift = rem.len() - 1 - db;
        quot[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            rem[shift + i] = pmod(rem[shift + i] - c * bc, p);
        }
        rem = ptrim(rem);
    }
    (ptrim(quot), rem)
}

fn pgcd(a: &PPoly, b: &PPoly, p: i64) -> PPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let (_, r) = pdiv_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        let inv = pinv(*a.last().unwrap(), p);
        pscale(&a, inv, p)
    }
}

fn pderiv(a: &PPoly, p: i64) -> PPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    ptrim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| pmod(i as i64 * c, p))
            .collect(),
    )
}

fn ppow_mod(base: &PPoly, mut e: u64, m: &PPoly, p: i64) -> PPoly {
    let mut result = vec![1i64];
    let mut b = pdiv_rem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = pdiv_rem(&pmul(&result, &b, p), m, p).1;
        }
        e >>= 1;
        if e > 0 {
            b = pdiv_rem(&pmul(&b, &b, p), m, p).1;
        }
    }
    result
}

/// Berlekamp factorization of a squarefree monic polynomial mod p.
fn berlekamp(f: &PPoly, p: i64) -> Vec<PPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    // matrix of x^{p*i} mod f, rows i = 0..n
    let xp = ppow_mod(&[0, 1].to_vec(), p as u64, f, p);
    let mut rows: Vec<PPoly> = Vec::with_capacity(n);
    let mut cur = vec![1i64];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = pdiv_rem(&pmul(&cur, &xp, p), f, p).1;
    }
    // B = Q^T - I as an n x n matrix; nullspace of (Q - I)^T ... we want v
    // with v(x)^p = v(x) mod f, i.e. v * (Q - I) = 0 treating v as a row of
    // coefficients and Q[i][j] = coeff_j(x^{pi}).
    let mut mat = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let q = rows[i].get(j).copied().unwrap_or(0);
            mat[i][j] = pmod(q - if i == j { 1 } else { 0 }, p);
        }
    }
    // nullspace of mat^T * v = 0 -> use row reduction on the transpose
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = mat[j][i];
        }
    }
    let mut pivots: Vec<Option<usize>> = vec![None; n];
    let mut rank = 0;
    for col in 0..n {
        let piv = (rank..n).find(|&r| a[r][col] != 0);
        let Some(piv) = piv else { continue };
        a.swap(rank, piv);
        let inv = pinv(a[rank][col], p);
        for j in 0..n {
            a[rank][j] = pmod(a[rank][j] * inv, p);
        }
        for r in 0..n {
            if r != rank && a[r][col] != 0 {
                let c = a[r][col];
                for j in 0..n {
                    a[r][j] = pmod(a[r][j] - c * a[rank][j], p);
                }
            }
        }
        pivots[col] = Some(rank);
        rank += 1;
        if rank == n {
            break;
        }
    }
    let r = n - rank; // number of irreducible factors
    let mut basis: Vec<PPoly> = Vec::new();
    for col in 0..n {
        if pivots[col].is_some() {
            continue;
        }
        let mut v = vec![0i64; n];
        v[col] = 1;
        for c2 in 0..n {
            if let Some(prow) = pivots[c2] {
                v[c2] = pmod(-a[prow][col], p);
            }
        }
        basis.push(ptrim(v));
    }
    if r == 1 {
        return vec![f.clone()];
    }
    // split using the basis vectors
    let mut factors = vec![f.clone()];
    for v in &basis {
        if factors.len() == r {
            break;
        }
        if v.len() <= 1 {
            continue; // the constant vector does not split anything
        }
        let mut next = Vec::new();
        for fac in factors {
            if fac.len() - 1 <= 1 || next.len() + 1 == r {
                next.push(fac);
                continue;
            }
            let mut pieces = Vec::new();
            let mut rest = fac.clone();
            for c in 0..p {
                if rest.len() <= 1 {
                    break;
                }
                let mut shifted = v.clone();
                if shifted.is_empty() {
                    shifted = vec![0];
                }
                shifted[0] = pmod(shifted[0] - c, p);
                let g = pgcd(&rest, &ptrim(shifted), p);
                if g.len() > 1 && g.len() < rest.len() {
                    rest = pdiv_rem(&rest, &g, p).0;
                    pieces.push(g);
                } else if g.len() == rest.len() {
                    // whole thing; keep going
                }
            }
            pieces.push(rest);
            next.extend(pieces.into_iter().filter(|x| x.len() > 1));
        }
        factors = next;
    }
    factors
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

fn zmod_sym(c: &Int, m: &Int) -> Int {
    let r = c.mod_floor(m);
    if &(&r * 2) > m {
        r - m
    } else {
        r
    }
}

fn zpoly_mod_sym(a: &ZPoly, m: &Int) -> ZPoly {
    ztrim(a.iter().map(|c| zmod_sym(c, m)).collect())
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![Int::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Int::zero);
        let y = b.get(i).cloned().unwrap_or_else(Int::zero);
        out[i] = x - y;
    }
    ztrim(out)
}

fn zadd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![Int::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Int::zero);
        let y = b.get(i).cloned().unwrap_or_else(Int::zero);
        out[i] = x + y;
    }
    ztrim(out)
}

/// One quadratic Hensel step: given f ≡ g·h (mod m), s·g + t·h ≡ 1 (mod m),
/// h monic, returns (g', h', s', t') with the same relations mod m².
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    m: &Int,
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zpoly_mod_sym(&zsub(f, &zmul(g, h)), &m2);
    // division by monic h over Z/m²
    let (q, r) = zdiv_monic_mod(&zmul(s, &e), h, &m2);
    let g1 = zpoly_mod_sym(&zadd(&zadd(g, &zmul(t, &e)), &zmul(&q, g)), &m2);
    let h1 = zpoly_mod_sym(&zadd(h, &r), &m2);
    let b = zpoly_mod_sym(&zsub(&zadd(&zmul(s, &g1), &zmul(t, &h1)), &[Int::one()].to_vec()), &m2);
    let (c, d) = zdiv_monic_mod(&zmul(s, &b), &h1, &m2);
    let s1 = zpoly_mod_sym(&zsub(s, &d), &m2);
    let t1 = zpoly_mod_sym(&zsub(&zsub(t, &zmul(t, &b)), &zmul(&c, &g1)), &m2);
    (g1, h1, s1, t1)
}

/// Division with remainder by a monic polynomial, coefficients mod m.
fn zdiv_monic_mod(a: &ZPoly, b: &ZPoly, m: &Int) -> (ZPoly, ZPoly) {
    let db = zdeg(b);
    let mut rem = zpoly_mod_sym(a, m);
    let mut quot: ZPoly = vec![Int::zero(); rem.len().saturating_sub(db)];
    while !rem.is_empty() && zdeg(&rem) >= db {
        let c = rem.last().unwrap().clone();
        let shift = zdeg(&rem) - db;
        quot[shift] = &quot[shift] + &c;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] = zmod_sym(&(&rem[shift + i] - bc * &c), m);
        }
        rem = ztrim(rem);
    }
    (ztrim(quot), rem)
}

/// Lift a modular factorization f ≡ lc(f)·w_1···w_r (mod p) to mod p^(2^k) ≥ bound.
fn hensel_lift_tree(f: &ZPoly, factors: &[PPoly], p: i64, bound: &Int) -> (Vec<ZPoly>, Int) {
    // binary tree lifting, following the standard multifactor scheme
    if factors.len() == 1 {
        let mut m = Int::from(p);
        while &m < bound {
            m = &m * &m;
        }
        return (vec![zpoly_mod_sym(f, &m)], m);
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let to_z = |q: &PPoly| -> ZPoly { q.iter().map(|&c| Int::from(c)).collect() };
    let pint = Int::from(p);
    let mut g: ZPoly = left.iter().map(to_z).fold(vec![Int::one()], |acc, x| {
        zpoly_mod_sym(&zmul(&acc, &x), &pint)
    });
    let h: ZPoly = right.iter().map(to_z).fold(vec![Int::one()], |acc, x| {
        zpoly_mod_sym(&zmul(&acc, &x), &pint)
    });
    // attach lc(f) to the left part
    let lc = zmod_sym(f.last().unwrap(), &pint);
    g = zpoly_mod_sym(&zmul(&g, &[lc].to_vec()), &pint);
    // Bezout: s g + t h = 1 mod p via F_p ext euclid
    let gp: PPoly = ptrim(g.iter().map(|c| pmod_int(c, p)).collect());
    let hp: PPoly = ptrim(h.iter().map(|c| pmod_int(c, p)).collect());
    let (s0, t0) = p_ext_gcd(&gp, &hp, p);
    let mut s: ZPoly = s0.iter().map(|&c| Int::from(c)).collect();
    let mut t: ZPoly = t0.iter().map(|&c| Int::from(c)).collect();
    let mut gg = g;
    let mut hh = h;
    let mut m = pint.clone();
    while &m < bound {
        let (g1, h1, s1, t1) = hensel_step(&m, f, &gg, &hh, &s, &t);
        gg = g1;
        hh = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    // recurse: gg corresponds to left (with lc folded in), hh to right (monic)
    let (mut lf, _) = hensel_lift_tree(&gg, left, p, bound);
    let (rf, _) = hensel_lift_tree(&hh, right, p, bound);
    lf.extend(rf);
    (lf, m)
}

fn pmod_int(c: &Int, p: i64) -> i64 {
    let r = c.mod_floor(&Int::from(p));
    let s: i64 = r.to_string().parse().unwrap();
    s
}

/// Extended euclid in F_p[x]: returns (s, t) with s·a + t·b = 1.
fn p_ext_gcd(a: &PPoly, b: &PPoly, p: i64) -> (PPoly, PPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (PPoly, PPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (PPoly, PPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = pdiv_rem(&r0, &r1, p);
        let snew = psub(&s0, &pmul(&q, &s1, p), p);
        let tnew = psub(&t0, &pmul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = snew;
        t0 = t1;
        t1 = tnew;
    }
    assert!(r0.len() == 1, "hensel bezout: inputs not coprime");
    let inv = pinv(r0[0], p);
    (pscale(&s0, inv, p), pscale(&t0, inv, p))
}

// ---------------------------------------------------------------------------
// Zassenhaus driver
// ---------------------------------------------------------------------------

const PRIMES: &[i64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
];

/// Factor a squarefree primitive integer polynomial into irreducible
/// primitive integer factors.
fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = zdeg(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();
    // good prime: lc invertible, squarefree reduction
    let mut chosen = None;
    for &p in PRIMES {
        if (&lc % p).is_zero() {
            continue;
        }
        let fp: PPoly = ptrim(f.iter().map(|c| pmod_int(c, p)).collect());
        if fp.len() != f.len() {
            continue;
        }
        let d = pgcd(&fp, &pderiv(&fp, p), p);
        if d.len() == 1 {
            chosen = Some(p);
            break;
        }
    }
    let p = chosen.expect("no good prime found for factorization");
    let fp: PPoly = ptrim(f.iter().map(|c| pmod_int(c, p)).collect());
    let fp_monic = pscale(&fp, pinv(*fp.last().unwrap(), p), p);
    let mut modular = berlekamp(&fp_monic, p);
    modular.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // Landau-Mignotte style bound on factor coefficients, times lc
    let height = max_abs_coeff(f);
    let bound: Int = (Int::one() << (n + 3)) * height * lc.abs() * (n as i64 + 1);
    let two_bound: Int = &bound * 2 + 1;
    let (lifted, modulus) = hensel_lift_tree(f, &modular, p, &two_bound);

    // subset recombination
    let mut remaining: Vec<ZPoly> = lifted;
    let mut current = f.clone();
    let mut out: Vec<ZPoly> = Vec::new();
    let mut subset_size = 1usize;
    'outer: while 2 * subset_size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, subset_size) {
            let lc_cur = current.last().unwrap().clone();
            let mut cand: ZPoly = vec![lc_cur.clone()];
            for &i in &combo {
                cand = zpoly_mod_sym(&zmul(&cand, &remaining[i]), &modulus);
            }
            let cand = zprimitive(&zpoly_mod_sym(&cand, &modulus));
            if cand.len() <= 1 {
                continue;
            }
            if let Some(quot) = zdiv_exact(&current, &cand) {
                out.push(cand);
                current = zprimitive(&quot);
                let keep: Vec<ZPoly> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                remaining = keep;
                continue 'outer;
            }
        }
        subset_size += 1;
    }
    if zdeg(&current) >= 1 {
        out.push(zprimitive(&current));
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

// ---------------------------------------------------------------------------
// public interface over Q
// ---------------------------------------------------------------------------

/// Factor a univariate rational polynomial into monic irreducible factors
/// with multiplicities (the leading coefficient is dropped).
pub fn factor_rational(f: &QUniPoly) -> Vec<(QUniPoly, usize)> {
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let mut out = Vec::new();
    for (sqf, mult) in f.squarefree_decomposition() {
        for irr in factor_squarefree_rational(&sqf) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|a, b| {
        (a.0.degree(), key(&a.0), a.1).cmp(&(b.0.degree(), key(&b.0), b.1))
    });
    out
}

fn key(p: &QUniPoly) -> Vec<(Int, Int)> {
    p.coeffs()
        .iter()
        .map(|c| (c.numer().clone(), c.denom().clone()))
        .collect()
}

/// Factor a squarefree monic rational polynomial into monic irreducibles.
pub fn factor_squarefree_rational(f: &QUniPoly) -> Vec<QUniPoly> {
    let deg = f.degree().expect("factoring zero");
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![f.monic()];
    }
    // clear denominators -> primitive integer polynomial
    let mut den_lcm = Int::one();
    for c in f.coeffs() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let zf: ZPoly = ztrim(
        f.coeffs()
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect(),
    );
    let zf = zprimitive(&zf);
    let factors = zassenhaus(&zf);
    let mut out: Vec<QUniPoly> = factors
        .iter()
        .map(|zp| {
            QUniPoly::from_coeffs(zp.iter().map(|c| Rat::from_integer(c.clone())).collect())
                .monic()
        })
        .collect();
    out.sort_by(|a, b| (a.degree(), key(a)).cmp(&(b.degree(), key(b))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat_int;

    fn upoly(coeffs: &[i64]) -> QUniPoly {
        QUniPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn factors_simple_quadratics() {
        // t^2 - 1 = (t-1)(t+1)
        let f = upoly(&[-1, 0, 1]);
        let fs = factor_squarefree_rational(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0], upoly(&[-1, 1]));
        assert_eq!(fs[1], upoly(&[1, 1]));
        // t^2 - 2 irreducible
        let f = upoly(&[-2, 0, 1]);
        assert_eq!(factor_squarefree_rational(&f).len(), 1);
        // t^2 + 2 irreducible
        let f = upoly(&[2, 0, 1]);
        assert_eq!(factor_squarefree_rational(&f).len(), 1);
    }

    #[test]
    fn factors_with_multiplicity() {
        // t^3 (t-1)^2 (t^2+1)
        let t = upoly(&[0, 1]);
        let f = t
            .mul(&t)
            .mul(&t)
            .mul(&upoly(&[-1, 1]))
            .mul(&upoly(&[-1, 1]))
            .mul(&upoly(&[1, 0, 1]));
        let fs = factor_rational(&f);
        assert_eq!(
            fs,
            vec![
                (upoly(&[-1, 1]), 2),
                (upoly(&[0, 1]), 3),
                (upoly(&[1, 0, 1]), 1),
            ]
        );
    }

    #[test]
    fn factors_quartic_split() {
        // t^4 - 4 = (t^2-2)(t^2+2)
        let f = upoly(&[-4, 0, 0, 0, 1]);
        let fs = factor_squarefree_rational(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0], upoly(&[-2, 0, 1]));
        assert_eq!(fs[1], upoly(&[2, 0, 1]));
    }

    #[test]
    fn irreducible_cyclotomic_like() {
        // t^4 + 1 (the Example-1 direction polynomial after scaling)
        let f = upoly(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_squarefree_rational(&f).len(), 1);
        // t^4 + 1/16 is irreducible too
        let f = QUniPoly::from_coeffs(vec![
            crate::field::rat(1, 16),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(1),
        ]);
        assert_eq!(factor_squarefree_rational(&f).len(), 1);
    }

    #[test]
    fn factors_products_of_many_linears() {
        // (t-1)(t-2)(t-3)(t-4)(t+5)
        let mut f = QUniPoly::one();
        for r in [1i64, 2, 3, 4, -5] {
            f = f.mul(&upoly(&[-r, 1]));
        }
        let fs = factor_squarefree_rational(&f);
        assert_eq!(fs.len(), 5);
    }

    #[test]
    fn factors_non_monic_rational() {
        // (2t+1)(3t-1) with rational normalization -> (t+1/2)(t-1/3)
        let f = upoly(&[-1, 1, 6]);
        let fs = factor_squarefree_rational(&f);
        assert_eq!(fs.len(), 2);
        for irr in &fs {
            assert_eq!(irr.degree(), Some(1));
        }
    }

    #[test]
    fn zassenhaus_needs_recombination() {
        // x^4 + 1 factors mod every prime but is irreducible over Z; with
        // x^4 - 10x^2 + 1 = (x^2 - 2x - 1)(x^2 + 2x - 1) ... actually
        // x^4 - 10x^2 + 1 is the minimal polynomial of sqrt2 + sqrt3 and is
        // irreducible over Q while splitting into quadratics mod every prime.
        let f = upoly(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_squarefree_rational(&f).len(), 1);
        // and a genuinely split quartic with same shape
        let f = upoly(&[1, 0, -5, 0, 4]); // (t^2-1)(t^2-1/4)*4 = (t-1)(t+1)(2t-1)(2t+1)
        assert_eq!(factor_squarefree_rational(&f).len(), 4);
    }
}
