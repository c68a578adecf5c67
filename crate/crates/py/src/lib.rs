//! Python bindings for the `textsteg` toolkit.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyBytes;

use textsteg::metrics::{self, SimilarityParams};
use textsteg::{bench, formats, otp, random_source, stego, CipherText, CoverSource, Method, OneTimeKey};

create_exception!(pytextsteg, TextStegError, PyException, "Failure reported by the toolkit.");

fn to_py(e: textsteg::Error) -> PyErr {
    TextStegError::new_err((e.to_string(), e.exit_code()))
}

fn parse_method(name: &str) -> PyResult<Method> {
    name.parse().map_err(PyValueError::new_err)
}

/// Scrambles `message` with a fresh one-time key. Returns `(cipher, key)`.
#[pyfunction]
#[pyo3(signature = (message, seed=None))]
fn encipher<'py>(
    py: Python<'py>,
    message: &[u8],
    seed: Option<u64>,
) -> (Bound<'py, PyBytes>, Bound<'py, PyBytes>) {
    let (cipher, key) = otp::encipher(message, &mut random_source(seed));
    (PyBytes::new(py, cipher.units()), PyBytes::new(py, key.units()))
}

#[pyfunction]
fn decipher<'py>(py: Python<'py>, cipher: &[u8], key: &[u8]) -> PyResult<Bound<'py, PyBytes>> {
    let plain = otp::decipher(&CipherText::from(cipher), &OneTimeKey::from(key)).map_err(to_py)?;
    Ok(PyBytes::new(py, &plain))
}

/// Word store used by the missing-letter and wordlist methods.
#[pyclass(frozen, module = "pytextsteg")]
struct Dictionary(textsteg::Dictionary);

#[pymethods]
impl Dictionary {
    /// Parses dictionary text (`word` or `word<TAB>gloss` per line).
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        textsteg::Dictionary::load(text).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn bundled() -> Self {
        Self(textsteg::Dictionary::bundled())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    /// Buckets `method` needs but cannot find, as `length<TAB>initial` rows.
    fn audit(&self, method: &str) -> PyResult<Vec<String>> {
        let report = self.0.audit_coverage(parse_method(method)?);
        Ok(report.gaps.iter().map(ToString::to_string).collect())
    }
}

/// Output of [`hide`].
#[pyclass(frozen, get_all, module = "pytextsteg")]
struct HideResult {
    method: String,
    stego_text: String,
    cover_text: String,
    /// Stego key in its file format.
    stego_key: String,
    hidden_bytes: usize,
    cover_bytes: usize,
    reuse_warnings: usize,
}

#[pymethods]
impl HideResult {
    fn capacity_percent(&self) -> PyResult<f64> {
        metrics::capacity_percent(self.hidden_bytes, self.cover_bytes).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "HideResult(method={:?}, hidden_bytes={}, cover_bytes={})",
            self.method, self.hidden_bytes, self.cover_bytes
        )
    }
}

/// Hides `cipher`. Paragraph needs `cover`; the other methods use
/// `dictionary`, or the bundled one when it is omitted.
#[pyfunction]
#[pyo3(signature = (method, cipher, dictionary=None, cover=None, seed=None))]
fn hide(
    method: &str,
    cipher: &[u8],
    dictionary: Option<&Bound<'_, Dictionary>>,
    cover: Option<&str>,
    seed: Option<u64>,
) -> PyResult<HideResult> {
    let method = parse_method(method)?;
    let cipher = CipherText::from(cipher);
    let mut rng = random_source(seed);
    let bundled;
    let source = match (method, cover, dictionary) {
        (Method::Paragraph, Some(text), _) => CoverSource::Text(text),
        (Method::Paragraph, None, _) => return Err(PyValueError::new_err("paragraph method needs cover")),
        (_, _, Some(d)) => CoverSource::Dictionary(&d.get().0),
        (_, _, None) => {
            bundled = textsteg::Dictionary::bundled();
            CoverSource::Dictionary(&bundled)
        }
    };
    let b = stego::hide(method, &cipher, source, &mut rng).map_err(to_py)?;
    Ok(HideResult {
        method: method.to_string(),
        stego_key: formats::write_stego_key(&b.stego_key),
        stego_text: b.stego_text,
        cover_text: b.cover_text,
        hidden_bytes: b.stats.hidden_bytes,
        cover_bytes: b.stats.cover_bytes,
        reuse_warnings: b.stats.reuse_warnings,
    })
}

/// Recovers the cipher units from a stego text and its key file content.
#[pyfunction]
fn seek<'py>(py: Python<'py>, method: &str, stego_text: &str, stego_key: &str) -> PyResult<Bound<'py, PyBytes>> {
    let key = formats::read_stego_key(parse_method(method)?, stego_key).map_err(to_py)?;
    let cipher = stego::seek(stego_text, &key).map_err(to_py)?;
    Ok(PyBytes::new(py, cipher.units()))
}

#[pyfunction]
fn jaro(a: &str, b: &str) -> f64 {
    metrics::jaro(a, b)
}

#[pyfunction]
#[pyo3(signature = (a, b, prefix_scale=0.1, max_prefix=4))]
fn jaro_winkler(a: &str, b: &str, prefix_scale: f64, max_prefix: usize) -> PyResult<f64> {
    let params = SimilarityParams::new(prefix_scale, max_prefix).map_err(to_py)?;
    Ok(metrics::jaro_winkler(a, b, &params))
}

#[pyfunction]
fn capacity_percent(hidden_bytes: usize, cover_bytes: usize) -> PyResult<f64> {
    metrics::capacity_percent(hidden_bytes, cover_bytes).map_err(to_py)
}

/// Per-line Jaro-Winkler scores and their average.
#[pyfunction]
fn similarity_report(cover: &str, stego: &str) -> PyResult<(Vec<f64>, f64)> {
    let r = metrics::stego_similarity_report(cover, stego).map_err(to_py)?;
    Ok((r.per_pair.iter().map(|&(_, s)| s).collect(), r.average))
}

/// Runs the standard benchmark on the bundled data and returns TSV text.
#[pyfunction]
#[pyo3(signature = (seed=0))]
fn run_bench(seed: u64) -> PyResult<String> {
    let dict = textsteg::Dictionary::bundled();
    let report = bench::run(&dict, textsteg::paragraph::BUNDLED_COVER, seed).map_err(to_py)?;
    Ok(report.to_tsv())
}

#[pymodule]
pub fn pytextsteg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TextStegError", m.py().get_type::<TextStegError>())?;
    m.add_class::<Dictionary>()?;
    m.add_class::<HideResult>()?;
    m.add_function(wrap_pyfunction!(encipher, m)?)?;
    m.add_function(wrap_pyfunction!(decipher, m)?)?;
    m.add_function(wrap_pyfunction!(hide, m)?)?;
    m.add_function(wrap_pyfunction!(seek, m)?)?;
    m.add_function(wrap_pyfunction!(jaro, m)?)?;
    m.add_function(wrap_pyfunction!(jaro_winkler, m)?)?;
    m.add_function(wrap_pyfunction!(capacity_percent, m)?)?;
    m.add_function(wrap_pyfunction!(similarity_report, m)?)?;
    m.add_function(wrap_pyfunction!(run_bench, m)?)?;
    Ok(())
}
