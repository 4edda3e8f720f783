//! Fractional part, sawtooth and divisibility indicator.

use super::scalar::Scalar;

/// {x} = x − ⌊x⌋.
pub fn frac<T: Scalar>(x: &T) -> T {
    x.clone() - x.floor_value()
}

/// ((x)) = {x} − 1/2 for non-integers and 0 at integers.
pub fn sawtooth<T: Scalar>(x: &T) -> T {
    if x.is_int() {
        T::zero()
    } else {
        frac(x) - T::from_frac(1, 2)
    }
}

/// δ(x, n) = n when x is an integer divisible by n, else 0.
pub fn delta<T: Scalar>(x: &T, n: i64) -> i64 {
    if n == 0 || !x.is_int() {
        return 0;
    }
    let q = x.clone() / T::from_int(n);
    if q.is_int() {
        n
    } else {
        0
    }
}

/// The periodic Bernoulli function B̄₂(x) = {x}² − {x} + 1/6.
pub fn bernoulli2<T: Scalar>(x: &T) -> T {
    let f = frac(x);
    f.clone() * f.clone() - f + T::from_frac(1, 6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&rat(3, 4)), rat(1, 4));
        assert_eq!(sawtooth(&rat(2, 1)), rat(0, 1));
        assert_eq!(sawtooth(&rat(-1, 4)), rat(1, 4));
        assert_eq!(sawtooth(&rat(1, 2)), rat(0, 1));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(&rat(1 - 7, 1), 2), 2);
        assert_eq!(delta(&rat(1, 2), 2), 0);
        assert_eq!(delta(&rat(3, 1), 2), 0);
        assert_eq!(delta(&rat(0, 1), 5), 5);
    }

    #[test]
    fn frac_of_negative() {
        assert_eq!(frac(&rat(-7, 3)), rat(2, 3));
    }
}
