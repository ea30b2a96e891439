use markoff_lab::contfrac::{convergents, prefix_interval, quad_cf_expand, quad_digits, rational_cf};
use markoff_lab::exactnum::{int, rat, BinQuadForm, Mat2, QuadNum, RatInterval};
use markoff_lab::markoff::{cohn_matrix, is_markoff, locate, pairwise_coprime, MarkoffTriple, Side};
use markoff_lab::spectrum::{lambda_at, mu_exact, WindowedBiWord};
use markoff_lab::words::{palindrome_factor, phi, Endo, EndoWord, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

fn quad() -> impl Strategy<Value = QuadNum> {
    (-50i64..50, -20i64..20, 2i64..40, 1i64..30)
        .prop_map(|(p, q, d, r)| QuadNum::new(int(p), int(q), int(d), int(r)).unwrap())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-200i64..200, 1i64..100).prop_map(|(n, d)| rat(n, d))
}

fn interval() -> impl Strategy<Value = (RatInterval, BigRational)> {
    (rational(), rational(), 0u32..=8).prop_map(|(a, b, t)| {
        let iv = RatInterval::hull_of(a, b);
        let x = iv.lo() + (iv.hi() - iv.lo()) * rat(t as i64, 8);
        (iv, x)
    })
}

fn mat() -> impl Strategy<Value = Mat2> {
    (-9i64..10, -9i64..10, -9i64..10, -9i64..10).prop_map(|(a, b, c, d)| Mat2::new(a, b, c, d))
}

fn path() -> impl Strategy<Value = Vec<Side>> {
    prop::collection::vec(prop::bool::ANY.prop_map(|b| if b { Side::Left } else { Side::Right }), 0..12).prop_map(
        |mut p| {
            p.insert(0, Side::Left);
            p
        },
    )
}

fn digits(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..6, 1..max_len)
}

/// Brute-force `min |F|` over nonzero points of the box `[−n, n]²`.
fn brute_min(f: &BinQuadForm, n: i64) -> BigInt {
    let mut best: Option<BigInt> = None;
    for x in -n..=n {
        for y in -n..=n {
            if x == 0 && y == 0 {
                continue;
            }
            let v = f.eval(&int(x), &int(y)).abs();
            if best.as_ref().is_none_or(|b| &v < b) {
                best = Some(v);
            }
        }
    }
    best.unwrap()
}

/// `min |F(p, q)|` over convergents `p/q` of both roots: every point with
/// `|F| < √D/2` is one of them, and `μ(F) ≤ √D/√5`.
fn convergent_min(f: &BinQuadForm) -> BigInt {
    let (r1, r2) = f.roots().unwrap();
    let mut best: Option<BigInt> = None;
    for r in [r1, r2] {
        let (a0, w) = quad_digits(&r, 200).unwrap();
        for c in convergents(&w, &a0) {
            let v = f.eval(c.numer(), c.denom()).abs();
            if best.as_ref().is_none_or(|b| &v < b) {
                best = Some(v);
            }
        }
    }
    best.unwrap()
}

proptest! {
    #[test]
    fn quad_field_identities(x in quad(), y in quad()) {
        if let Ok(s) = x.add(&y) {
            prop_assert_eq!(s.sub(&y).unwrap(), x.clone());
            let p = x.mul(&y).unwrap();
            prop_assert_eq!(p.conj(), x.conj().mul(&y.conj()).unwrap());
            prop_assert_eq!(p.norm(), x.norm() * y.norm());
            if !y.is_zero() {
                prop_assert_eq!(p.div(&y).unwrap(), x.clone());
            }
        }
    }

    #[test]
    fn quad_order_matches_enclosures(x in quad(), y in quad()) {
        if let Ok(o) = x.try_cmp(&y) {
            let w = rat(1, 1_000_000);
            let (a, b) = (x.to_interval(&w), y.to_interval(&w));
            prop_assert!(a.contains(&a.midpoint()));
            match o {
                std::cmp::Ordering::Less => prop_assert!(a.lo() < b.hi()),
                std::cmp::Ordering::Greater => prop_assert!(a.hi() > b.lo()),
                std::cmp::Ordering::Equal => prop_assert!(a.intersect(&b).is_some()),
            }
        }
    }

    #[test]
    fn quad_floor_brackets(x in quad()) {
        let f = x.floor();
        prop_assert!(x.cmp_int(&f) != std::cmp::Ordering::Less);
        prop_assert!(x.cmp_int(&(f + 1)) == std::cmp::Ordering::Less);
    }

    #[test]
    fn interval_ops_contain_pointwise((a, x) in interval(), (b, y) in interval()) {
        prop_assert!(a.add(&b).contains(&(&x + &y)));
        prop_assert!(a.sub(&b).contains(&(&x - &y)));
        prop_assert!(a.mul(&b).contains(&(&x * &y)));
        prop_assert!(a.square().contains(&(&x * &x)));
        if let Ok(r) = b.recip() {
            prop_assert!(r.contains(&(BigRational::from_integer(1.into()) / &y)));
        }
    }

    #[test]
    fn mobius_action_composes(g in mat(), h in mat(), x in rational()) {
        if let Some(hx) = h.apply_rat(&x) {
            if let Some(ghx) = g.apply_rat(&hx) {
                prop_assert_eq!((&g * &h).apply_rat(&x), Some(ghx));
            }
        }
        prop_assert_eq!((&g * &h).det(), g.det() * h.det());
    }

    #[test]
    fn phi_is_a_homomorphism(u in digits(10), v in digits(10)) {
        let (u, v) = (Word(u), Word(v));
        prop_assert_eq!(phi(&u.concat(&v)), &phi(&u) * &phi(&v));
        prop_assert_eq!(phi(&u.reversed()), phi(&u).transpose());
        let g = phi(&u);
        prop_assert_eq!(g.det().abs(), int(1));
        // entries grow along the word: a ≥ b ≥ d and a ≥ c ≥ d
        prop_assert!(g.a >= g.b && g.b >= g.d && g.a >= g.c && g.c >= g.d);
    }

    #[test]
    fn rational_cf_roundtrip(x in rational()) {
        let (a0, w) = rational_cf(&x).unwrap();
        prop_assert_eq!(convergents(&w, &a0).last().cloned(), Some(x));
    }

    #[test]
    fn convergents_alternate_and_lie_in_prefix_interval(d in digits(14)) {
        let w = Word(d);
        let c = convergents(&w, &int(0));
        let iv = prefix_interval(&w.0, &int(0));
        for (k, ck) in c.iter().enumerate().skip(1) {
            let full = c.last().unwrap();
            prop_assert!(k == c.len() - 1 || (k % 2 == 0) == (ck <= full));
        }
        prop_assert!(iv.contains(c.last().unwrap()));
    }

    #[test]
    fn tree_nodes_are_markoff(p in path()) {
        let t = MarkoffTriple::from_path(&p).unwrap();
        let [m, m1, m2] = t.entries();
        prop_assert!(is_markoff(m, m1, m2));
        prop_assert!(pairwise_coprime(&t));
        prop_assert_eq!(locate(m, m1, m2).unwrap(), t.clone());
        let x = cohn_matrix(&t).unwrap();
        prop_assert_eq!(x.det(), int(1));
        prop_assert!(x.satisfies_bounds());
    }

    #[test]
    fn palindromes_in_images_of_ab(e in prop::collection::vec(prop::bool::ANY, 0..=8)) {
        let e = EndoWord(e.into_iter().map(|b| if b { Endo::U } else { Endo::V }).collect());
        let p = palindrome_factor(&e).unwrap();
        prop_assert!(p.is_palindrome());
    }

    #[test]
    fn mu_matches_brute_force(a in -12i64..12, b in -12i64..12, c in -12i64..12) {
        let f = BinQuadForm::new(a, b, c);
        let d = f.disc();
        prop_assume!(d > int(0));
        let root = num_integer::Roots::sqrt(&d);
        prop_assume!(&root * &root != d);
        let mu = mu_exact(&f).unwrap();
        let brute = brute_min(&f, 100);
        // the box can miss the minimum but never beat it
        prop_assert!(brute >= mu);
        prop_assert_eq!(convergent_min(&f), mu);
    }

    #[test]
    fn lambda_shrinks_as_window_grows(d in digits(20), extra in digits(6), i in 1usize..5) {
        prop_assume!(i < d.len());
        let small = WindowedBiWord::new(d.clone());
        let mut longer = d;
        longer.extend(extra);
        let big = WindowedBiWord::new(longer);
        let (s, b) = (lambda_at(&small, i).unwrap(), lambda_at(&big, i).unwrap());
        prop_assert!(b.is_subset_of(&s));
    }

    #[test]
    fn quadratic_expansions_are_eventually_periodic(x in quad()) {
        if let Ok(x) = markoff_lab::exactnum::QuadIrr::new(x) {
            let e = quad_cf_expand(&x).unwrap();
            prop_assert!(e.is_periodic());
            prop_assert_eq!(e.value(), x.into_inner());
        }
    }
}
