use num_rational::BigRational;
use num_traits::{Signed, Zero};
use padic_kas::cantor::{
    cantor_decode, cantor_encode, combine, extract, extract_all, phi_full, spread, CantorValue,
};
use padic_kas::interleave::{deinterleave, interleave, interleave_by_addition, InterleavedPadic};
use padic_kas::padic::{point_distance, PadicPoint, PadicScalar, TruncatedPadicInt};
use padic_kas::superposition::{
    build_g, build_h, superpose1, superpose2, superposition_argument, CylinderFunction, Location,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PRIMES: [u32; 5] = [2, 3, 5, 7, 11];

fn digits(p: u32, k: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..p, k)
}

fn make(p: u32, d: Vec<u32>) -> TruncatedPadicInt {
    let d: Vec<i64> = d.into_iter().map(i64::from).collect();
    padic_kas::make_padic(&d, p, d.len()).unwrap()
}

/// `count` integers sharing p and K.
fn ints(count: usize, max_k: usize) -> impl Strategy<Value = Vec<TruncatedPadicInt>> {
    (prop::sample::select(PRIMES.to_vec()), 1..=max_k).prop_flat_map(move |(p, k)| {
        prop::collection::vec(digits(p, k), count)
            .prop_map(move |ds| ds.into_iter().map(|d| make(p, d)).collect())
    })
}

/// Two points in (ℤ/p^K)ⁿ.
fn point_pair(max_k: usize) -> impl Strategy<Value = (PadicPoint, PadicPoint)> {
    (prop::sample::select(vec![2u32, 3, 5]), 1..=4usize, 1..=max_k).prop_flat_map(|(p, n, k)| {
        let pt = move || {
            prop::collection::vec(digits(p, k), n)
                .prop_map(move |cs| PadicPoint::new(cs.into_iter().map(|d| make(p, d)).collect()).unwrap())
        };
        (pt(), pt())
    })
}

fn cantor(p: u32, n: usize, len: usize) -> impl Strategy<Value = CantorValue> {
    prop::collection::vec(0..p, len)
        .prop_map(move |d| CantorValue::new(p, n, d.into_iter().map(|x| x * n as u32).collect()).unwrap())
}

proptest! {
    #[test]
    fn strong_triangle(v in ints(3, 16)) {
        let d = |a: &TruncatedPadicInt, b: &TruncatedPadicInt| a.sub(b).unwrap().norm();
        prop_assert!(d(&v[0], &v[2]) <= d(&v[0], &v[1]).max(d(&v[1], &v[2])));
    }

    #[test]
    fn additive_group_laws(v in ints(3, 16)) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(x.add(y).unwrap(), y.add(x).unwrap());
        prop_assert_eq!(x.add(y).unwrap().add(z).unwrap(), x.add(&y.add(z).unwrap()).unwrap());
        prop_assert_eq!(x.sub(y).unwrap().add(y).unwrap(), x.clone());
        prop_assert!(x.sub(x).unwrap().is_zero());
    }

    #[test]
    fn norm_reads_first_nonzero_digit(v in ints(1, 16)) {
        let x = &v[0];
        match x.digits().iter().position(|&d| d != 0) {
            None => prop_assert!(x.norm().is_zero()),
            Some(i) => prop_assert_eq!(
                x.norm(),
                BigRational::new(1.into(), num_bigint::BigInt::from(x.p()).pow(i as u32))
            ),
        }
    }

    #[test]
    fn textual_forms_round_trip(v in ints(2, 12)) {
        for x in &v {
            prop_assert_eq!(&x.to_string().parse::<TruncatedPadicInt>().unwrap(), x);
            let s = PadicScalar::from_int(x);
            prop_assert_eq!(s.to_string().parse::<PadicScalar>().unwrap(), s);
        }
        let pt = PadicPoint::new(v.clone()).unwrap();
        prop_assert_eq!(pt.to_string().parse::<PadicPoint>().unwrap(), pt);
    }

    #[test]
    fn encode_decode_beyond_exhaustive_sizes(v in ints(1, 48), n in 1..=4usize) {
        let c = cantor_encode(&v[0], n).unwrap();
        prop_assert_eq!(cantor_decode(&c), v[0].clone());
        prop_assert_eq!(CantorValue::parse(&c.to_string(), n).unwrap(), c.clone());
        // phi_full places digit i at position n·i: Σ n·dᵢ·q^(−n·i−1).
        let q = BigRational::from_integer(c.base().into());
        let expected = v[0].digits().iter().enumerate().fold(BigRational::zero(), |acc, (i, &d)| {
            acc + BigRational::from_integer((d * n as u32).into()) / num_traits::pow(q.clone(), n * i + 1)
        });
        prop_assert_eq!(phi_full(&v[0], n).unwrap().to_rational(), expected);
    }

    #[test]
    fn encode_preserves_digit_order(v in ints(2, 24), n in 1..=3usize) {
        let (a, b) = (cantor_encode(&v[0], n).unwrap(), cantor_encode(&v[1], n).unwrap());
        prop_assert_eq!(v[0].digits().cmp(v[1].digits()), a.to_rational().cmp(&b.to_rational()));
    }

    #[test]
    fn encode_prefix_bound(v in ints(2, 24), n in 1..=3usize) {
        let (x, y) = (&v[0], &v[1]);
        let shared = x.common_prefix_len(y);
        let (a, b) = (cantor_encode(x, n).unwrap(), cantor_encode(y, n).unwrap());
        prop_assert!(a.common_prefix_len(&b) >= shared);
        let q = a.base() as i64;
        let bound = BigRational::new(1.into(), num_bigint::BigInt::from(q).pow(shared as u32));
        prop_assert!((a.to_rational() - b.to_rational()).abs() <= bound);
    }

    #[test]
    fn combine_extract_inverse(
        (p, n, len) in (prop::sample::select(vec![2u32, 3, 5]), 1..=4usize, 1..=10usize),
        seed in any::<u64>(),
    ) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let parts: Vec<CantorValue> = (0..n)
            .map(|_| {
                let d = (0..len).map(|_| rng.gen_range(0..p) * n as u32).collect();
                CantorValue::new(p, n, d).unwrap()
            })
            .collect();
        let z = combine(&parts).unwrap();
        prop_assert_eq!(extract_all(&z), parts.clone());
        prop_assert_eq!(combine(&extract_all(&z)).unwrap(), z.clone());
        // Σ_k q^(−k)·spread(part_k) in exact arithmetic.
        let q = BigRational::from_integer(z.base().into());
        let mut sum = BigRational::zero();
        let mut weight = BigRational::from_integer(1.into());
        for part in &parts {
            sum += &weight * spread(part).to_rational();
            weight /= &q;
        }
        prop_assert_eq!(z.to_rational(), sum);
    }

    #[test]
    fn extract_prefix_bound(
        (z, w) in (prop::sample::select(vec![2u32, 3]), 2..=3usize, 1..=6usize)
            .prop_flat_map(|(p, n, k)| (cantor(p, n, n * k), cantor(p, n, n * k))),
        shared_extra in 0..8usize,
    ) {
        // Force a shared prefix of random length.
        let n = z.arity();
        let cut = shared_extra.min(z.len());
        let mut digits = z.digits()[..cut].to_vec();
        digits.extend_from_slice(&w.digits()[cut..]);
        let w = CantorValue::new(z.p(), n, digits).unwrap();
        let shared = z.common_prefix_len(&w);
        for k in 0..n {
            let need = (shared + n - 1 - k) / n;
            prop_assert!(extract(&z, k).unwrap().common_prefix_len(&extract(&w, k).unwrap()) >= need);
        }
    }

    #[test]
    fn interleave_round_trips((a, _) in point_pair(8)) {
        let z = interleave(&a);
        prop_assert_eq!(deinterleave(&z), a.clone());
        prop_assert_eq!(interleave_by_addition(&a).unwrap(), z.value().clone());
        let back = InterleavedPadic::new(z.value().clone(), a.dimension()).unwrap();
        prop_assert_eq!(interleave(&deinterleave(&back)), back);
    }

    #[test]
    fn interleave_contracts((a, b) in point_pair(6)) {
        let n = a.dimension();
        let lhs = interleave(&a).value().sub(interleave(&b).value()).unwrap().norm();
        let rhs = num_traits::pow(point_distance(&a, &b).unwrap(), n);
        prop_assert!(lhs <= rhs);
    }

    #[test]
    fn chain_matches_superposition_argument((a, _) in point_pair(6)) {
        let n = a.dimension();
        let parts: Vec<_> = a.coords().iter().map(|c| cantor_encode(c, n).unwrap()).collect();
        let z = combine(&parts).unwrap();
        prop_assert_eq!(&superposition_argument(&a).unwrap(), &z);
        let back: Vec<_> = extract_all(&z).iter().map(cantor_decode).collect();
        prop_assert_eq!(PadicPoint::new(back).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_tables_factor_through_one_variable(
        p in prop::sample::select(vec![2u32, 3]),
        n in 1..=3usize,
        k in 1..=2usize,
        seed in any::<u64>(),
        index in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let real = CylinderFunction::random_real(p, n, k, &mut rng).unwrap();
        let padic = CylinderFunction::random_padic(p, n, k, &mut rng).unwrap();
        let count = (p as u64).pow((n * k) as u32);
        let x = PadicPoint::from_index(index % count, p, n, k).unwrap();
        let g = build_g(&real).unwrap();
        prop_assert_eq!(superpose1(&g, &x).unwrap().to_bits(), real.eval_real(&x).unwrap().to_bits());
        let h = build_h(&padic).unwrap();
        prop_assert_eq!(superpose2(&h, &x).unwrap(), padic.eval_padic(&x).unwrap());
    }

    #[test]
    fn g_is_linear_inside_gaps(
        p in prop::sample::select(vec![2u32, 3]),
        k in 1..=2usize,
        seed in any::<u64>(),
        gap in any::<u64>(),
        num in 1..1000i64,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = CylinderFunction::random_real(p, 2, k, &mut rng).unwrap();
        let g = build_g(&f).unwrap();
        let i = gap % (g.block_count() - 1);
        let seg = g.gap(i);
        let lambda = BigRational::new(num.into(), 1000.into());
        let t = &seg.left + &lambda * (&seg.right - &seg.left);
        prop_assert_eq!(g.locate(&t).unwrap(), Location::Gap(i));
        let v = g.eval(&t).unwrap();
        let (lo, hi) = if seg.left_value <= seg.right_value {
            (seg.left_value, seg.right_value)
        } else {
            (seg.right_value, seg.left_value)
        };
        prop_assert!(lo <= v && v <= hi);
    }

    #[test]
    fn tables_survive_json(
        p in prop::sample::select(vec![2u32, 3, 5]),
        n in 1..=2usize,
        k in 1..=2usize,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for f in [
            CylinderFunction::random_real(p, n, k, &mut rng).unwrap(),
            CylinderFunction::random_padic(p, n, k, &mut rng).unwrap(),
        ] {
            let back = CylinderFunction::from_json(&f.to_json()).unwrap();
            for i in 0..f.point_count() {
                let x = PadicPoint::from_index(i, p, n, k).unwrap();
                prop_assert!(f.evaluate(&x).unwrap().identical(&back.evaluate(&x).unwrap()));
            }
        }
    }
}
