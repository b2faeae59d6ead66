//! Gaussian ideals organised by norm, for Möbius inversion over ℤ[i].
//!
//! Ideals of ℤ[i] factor over rational primes as: (1+i)² above 2, a split
//! pair 𝔭·𝔭̄ above p ≡ 1 (mod 4), and the inert (p) of norm p² above
//! p ≡ 3 (mod 4).  Squarefree ideals with norm dividing m therefore come
//! from independent per-prime choices, which is what [`moebius_ideals`]
//! enumerates; [`ideal_norm_counts`] counts *all* ideals of each norm
//! dividing m via the divisor character sum Σ_{d|n} χ₄(d).

/// Trial-division factorization of `n ≥ 1` into `(prime, exponent)` pairs in
/// ascending prime order.
pub fn factorize(n: i64) -> Vec<(i64, u32)> {
    assert!(n >= 1, "factorize requires n ≥ 1, got {n}");
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending.
fn divisors(n: i64) -> Vec<i64> {
    let mut out = vec![1i64];
    for (p, e) in factorize(n) {
        let prev = out.clone();
        let mut pk = 1i64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// A group of squarefree Gaussian ideals sharing a norm and Möbius value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealClass {
    /// Common norm of the ideals in the class; always divides the target m.
    pub norm: i64,
    /// Möbius value μ(I) = (−1)^{number of prime ideal factors}.
    pub mu: i8,
    /// How many distinct ideals the class contains (split primes give two).
    pub count: u32,
}

/// Squarefree Gaussian ideals with norm dividing `m`, grouped by
/// `(norm, μ)` and sorted by norm.  The unit ideal (norm 1, μ = +1) is
/// always present.
///
/// Per rational prime `p` with `v = v_p(m)` the squarefree options are:
/// the ramified (1+i) of norm 2 when `p = 2, v ≥ 1`; either split factor
/// (norm p, two ways) when `p ≡ 1 (4), v ≥ 1`, and their product `(p)` of
/// norm p² when `v ≥ 2`; the inert `(p)` of norm p² when `p ≡ 3 (4), v ≥ 2`.
pub fn moebius_ideals(m: i64) -> Vec<IdealClass> {
    assert!(m >= 1, "moebius_ideals requires m ≥ 1, got {m}");
    // (norm factor, μ factor, ways) options per prime; option 0 skips it.
    let mut per_prime: Vec<Vec<(i64, i8, u32)>> = Vec::new();
    for (p, v) in factorize(m) {
        let mut options = vec![(1i64, 1i8, 1u32)];
        if p == 2 {
            options.push((2, -1, 1));
        } else if p % 4 == 1 {
            options.push((p, -1, 2));
            if v >= 2 {
                options.push((p * p, 1, 1));
            }
        } else if v >= 2 {
            options.push((p * p, -1, 1));
        }
        per_prime.push(options);
    }

    let mut grouped: std::collections::BTreeMap<(i64, i8), u32> = std::collections::BTreeMap::new();
    let mut stack = vec![(0usize, 1i64, 1i8, 1u32)];
    while let Some((idx, norm, mu, count)) = stack.pop() {
        if idx == per_prime.len() {
            *grouped.entry((norm, mu)).or_insert(0) += count;
            continue;
        }
        for &(n, s, ways) in &per_prime[idx] {
            stack.push((idx + 1, norm * n, mu * s, count * ways));
        }
    }

    grouped
        .into_iter()
        .map(|((norm, mu), count)| IdealClass { norm, mu, count })
        .collect()
}

/// For each divisor `n | m` carrying at least one Gaussian ideal of norm
/// `n`, the pair `(n, number of ideals of norm n)` — *all* ideals, not just
/// squarefree ones.  The count is the character sum Σ_{d|n} χ₄(d).
pub fn ideal_norm_counts(m: i64) -> Vec<(i64, u32)> {
    assert!(m >= 1, "ideal_norm_counts requires m ≥ 1, got {m}");
    let chi = |d: i64| match d % 4 {
        1 => 1i64,
        3 => -1i64,
        _ => 0i64,
    };
    divisors(m)
        .into_iter()
        .filter_map(|n| {
            let r: i64 = divisors(n).into_iter().map(chi).sum();
            debug_assert!(r >= 0, "ideal counts cannot be negative");
            (r > 0).then_some((n, r as u32))
        })
        .collect()
}
