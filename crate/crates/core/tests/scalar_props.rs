use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qkernel::scalars::{Bindings, GaussianRational};
use qkernel::{q_integer, Scalar, Symbol};

/// Expression tree over s, w, a evaluated two ways: through `Scalar` and
/// pointwise in plain rationals.
#[derive(Clone, Debug)]
enum T {
    Leaf(i64, i64, i32, i32, i32),
    Add(Box<T>, Box<T>),
    Sub(Box<T>, Box<T>),
    Mul(Box<T>, Box<T>),
    Div(Box<T>, Box<T>),
}

fn tree() -> impl Strategy<Value = T> {
    let leaf = (-5i64..=5, 1i64..=4, -3i32..=3, -2i32..=2, -1i32..=1).prop_map(|(n, d, e1, e2, e3)| T::Leaf(n, d, e1, e2, e3));
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| T::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| T::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| T::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| T::Div(Box::new(a), Box::new(b))),
        ]
    })
}

fn build(t: &T) -> Option<Scalar> {
    Some(match t {
        T::Leaf(n, d, e1, e2, e3) => {
            &(&(&Scalar::from_ratio(*n, *d) * &Scalar::symbol_power(Symbol::S, *e1))
                * &Scalar::symbol_power(Symbol::W, *e2))
                * &Scalar::symbol_power(Symbol::A, *e3)
        }
        T::Add(a, b) => &build(a)? + &build(b)?,
        T::Sub(a, b) => &build(a)? - &build(b)?,
        T::Mul(a, b) => &build(a)? * &build(b)?,
        T::Div(a, b) => build(a)?.div(&build(b)?).ok()?,
    })
}

fn rpow(x: &BigRational, e: i32) -> Option<BigRational> {
    if x.is_zero() && e < 0 {
        return None;
    }
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    Some(if e < 0 { acc.recip() } else { acc })
}

fn eval(t: &T, s: &BigRational, w: &BigRational, a: &BigRational) -> Option<BigRational> {
    Some(match t {
        T::Leaf(n, d, e1, e2, e3) => {
            BigRational::new(BigInt::from(*n), BigInt::from(*d)) * rpow(s, *e1)? * rpow(w, *e2)? * rpow(a, *e3)?
        }
        T::Add(x, y) => eval(x, s, w, a)? + eval(y, s, w, a)?,
        T::Sub(x, y) => eval(x, s, w, a)? - eval(y, s, w, a)?,
        T::Mul(x, y) => eval(x, s, w, a)? * eval(y, s, w, a)?,
        T::Div(x, y) => {
            let d = eval(y, s, w, a)?;
            if d.is_zero() {
                return None;
            }
            eval(x, s, w, a)? / d
        }
    })
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn scalar_of(r: &BigRational) -> Scalar {
    Scalar::from_gaussian(GaussianRational::from_rational(r.clone()))
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    tree().prop_filter_map("division by zero", |t| build(&t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_form_agrees_with_pointwise_evaluation(
        t in tree(),
        (sn, sd) in (1i64..=7, 1i64..=5),
        (wn, wd) in (-7i64..=7, 1i64..=5),
        (an, ad) in (1i64..=7, 1i64..=5),
    ) {
        let (s, w, a) = (rat(sn, sd), rat(wn, wd), rat(an, ad));
        let Some(x) = build(&t) else { return Ok(()) };
        let Some(want) = eval(&t, &s, &w, &a) else { return Ok(()) };
        let b: Bindings = [(Symbol::S, scalar_of(&s)), (Symbol::W, scalar_of(&w)), (Symbol::A, scalar_of(&a))]
            .into_iter()
            .collect();
        // a removable singularity of the tree may be a pole of neither side
        if let Ok(v) = x.substitute(&b) {
            prop_assert_eq!(v.constant_value(), Some(GaussianRational::from_rational(want)));
        }
    }

    #[test]
    fn canonical_denominator_is_normalized(x in small_scalar()) {
        // equal values have equal representations
        let y = (&x * &Scalar::from_int(3)).div(&Scalar::from_int(3)).unwrap();
        prop_assert_eq!(&x, &y);
        let z = &(&x + &Scalar::symbol(Symbol::S)) - &Scalar::symbol(Symbol::S);
        prop_assert_eq!(&x, &z);
        if !x.is_zero() {
            prop_assert!(x.denominator().leading().is_some());
        }
    }

    #[test]
    fn field_axioms(x in small_scalar(), y in small_scalar(), z in small_scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn q_integer_symmetry(n in -12i64..=12) {
        prop_assert_eq!(q_integer(-n), -q_integer(n));
        let flip: Bindings = [(Symbol::S, Scalar::s_pow(-1))].into_iter().collect();
        prop_assert_eq!(q_integer(n).substitute(&flip).unwrap(), q_integer(n));
        // sum of q^(n-1-2k), q = s^2
        let mut want = Scalar::zero();
        for k in 0..n.abs() {
            want = &want + &Scalar::s_pow(2 * (n.abs() - 1 - 2 * k) as i32);
        }
        if n < 0 {
            want = -want;
        }
        prop_assert_eq!(q_integer(n), want);
    }

    #[test]
    fn i_substitution(x in small_scalar()) {
        let twice = x.q_to_minus_q().q_to_minus_q();
        let neg: Bindings = [(Symbol::S, -Scalar::symbol(Symbol::S))].into_iter().collect();
        prop_assert_eq!(&twice, &x.substitute(&neg).unwrap());
        prop_assert_eq!(twice.q_to_minus_q().q_to_minus_q(), x);
    }
}

#[test]
fn q_to_minus_q_of_two() {
    assert_eq!(q_integer(2).q_to_minus_q(), -q_integer(2));
}

#[test]
fn limit_pole() {
    let c = Scalar::one().div(&(&Scalar::one() - &Scalar::s_pow(-2))).unwrap();
    assert!(c.limit_q_to_one().is_err());
    let r = (&Scalar::s_pow(2) - &Scalar::s_pow(-2)).div(&(&Scalar::s_pow(1) - &Scalar::s_pow(-1))).unwrap();
    assert_eq!(r.limit_q_to_one().unwrap(), Scalar::from_int(2));
}
