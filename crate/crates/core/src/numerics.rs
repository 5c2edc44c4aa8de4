//! Log-domain arithmetic, compensated summation, type-class enumeration and
//! a golden-section maximizer.

use statrs::function::gamma::ln_gamma as statrs_ln_gamma;

/// Natural log of the gamma function for `x > 0`.
#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    statrs_ln_gamma(x)
}

/// `ln(n! / prod_a counts[a]!)`.
pub fn ln_multinomial(counts: &[u64]) -> f64 {
    let n: u64 = counts.iter().sum();
    if n == 0 {
        return 0.0;
    }
    ln_gamma(n as f64 + 1.0)
        - counts
            .iter()
            .filter(|&&c| c > 1)
            .map(|&c| ln_gamma(c as f64 + 1.0))
            .sum::<f64>()
}

/// Stable `ln(sum(exp(values)))`. Empty input or all `-inf` gives `-inf`.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY || max.is_nan() {
        return max;
    }
    if max == f64::INFINITY {
        return f64::INFINITY;
    }
    let mut acc = KahanSum::default();
    for &v in values {
        acc.add((v - max).exp());
    }
    max + acc.value().ln()
}

/// Pairwise tree reduction of `ln(sum(exp(values)))`.
///
/// The reduction order depends only on the input length, so the result is
/// bit-stable no matter how the terms were produced.
pub fn log_sum_exp_pairwise(values: &[f64]) -> f64 {
    const LEAF: usize = 64;
    if values.len() <= LEAF {
        return log_sum_exp(values);
    }
    let mid = values.len() / 2;
    log_add_exp(
        log_sum_exp_pairwise(&values[..mid]),
        log_sum_exp_pairwise(&values[mid..]),
    )
}

/// Stable `ln(exp(a) + exp(b))`.
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// Kahan-Babuska (Neumaier) compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = KahanSum::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Number of type classes (weak compositions of `n` into `k` parts),
/// `binomial(n + k - 1, k - 1)`, as a float so huge values do not overflow.
pub fn type_class_count(n: u64, k: usize) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let r = (k - 1) as f64;
    (ln_gamma(n as f64 + r + 1.0) - ln_gamma(n as f64 + 1.0) - ln_gamma(r + 1.0))
        .exp()
        .round()
}

/// Iterator over every count vector of length `k` summing to `n`, in
/// lexicographically decreasing order of the leading entries.
#[derive(Debug, Clone)]
pub struct TypeClasses {
    current: Vec<u64>,
    done: bool,
}

impl TypeClasses {
    pub fn new(n: u64, k: usize) -> Self {
        assert!(k >= 1, "alphabet must be non-empty");
        let mut current = vec![0; k];
        current[0] = n;
        Self {
            current,
            done: false,
        }
    }
}

impl Iterator for TypeClasses {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        // Find the rightmost non-last position holding mass, move one unit
        // right and sweep everything after it into the next slot.
        match (0..k.saturating_sub(1))
            .rev()
            .find(|&i| self.current[i] > 0)
        {
            None => self.done = true,
            Some(i) => {
                self.current[i] -= 1;
                let tail: u64 = self.current[i + 1..].iter().sum::<u64>() + 1;
                for c in &mut self.current[i + 1..] {
                    *c = 0;
                }
                self.current[i + 1] = tail;
            }
        }
        Some(out)
    }
}

/// Result of a one-dimensional maximization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub argmax: f64,
    pub value: f64,
    pub iterations: usize,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximizer of a unimodal `f` on `[lo, hi]`.
///
/// Stops when the bracket is narrower than `tol` or when the interior points
/// stop moving in floating point.
pub fn golden_section_max<F>(f: F, lo: f64, hi: f64, tol: f64) -> Maximum
where
    F: Fn(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut iterations = 0;
    while (b - a) > tol && iterations < 500 {
        iterations += 1;
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        if c >= d {
            break;
        }
    }
    let argmax = 0.5 * (a + b);
    Maximum {
        argmax,
        value: f(argmax),
        iterations,
    }
}
