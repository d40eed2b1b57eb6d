//! C interface to the `asymmetry` library.
//!
//! Objects are opaque handles created by `asym_*_new`/`asym_rep_*` functions
//! and released with the matching `*_free`. Fallible functions return an
//! [`AsymStatus`] and write results through out-pointers; after a non-OK
//! status, [`asym_last_error_message`] describes the failure on the calling
//! thread. Complex arrays are interleaved `(re, im)` pairs in row-major order.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use asymmetry::groups::{
    cyclic_group, cyclic_phase_representation, left_regular_representation, spin_j_representation,
    tensor_representation, u1_number_representation, uniform_density, Representation,
};
use asymmetry::linalg::{von_neumann_entropy, ComplexMatrix};
use asymmetry::measures;
use asymmetry::quantum::{apply_channel, is_symmetric_channel, DensityOperator, KrausChannel};
use asymmetry::Error;
use num_complex::Complex64;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidState = 3,
    DimensionMismatch = 4,
    GroupMismatch = 5,
    NotTracePreserving = 6,
    /// The requested quantity is infinite (Cramér-Rao value of a symmetric state).
    Infinite = 7,
    Numerical = 8,
    Panic = 9,
}

/// A validated density operator.
pub struct AsymState(DensityOperator);

/// A unitary group representation.
pub struct AsymRep(Representation);

/// A CPTP map given by Kraus operators.
pub struct AsymChannel(KrausChannel);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> AsymStatus {
    match e {
        Error::DimensionMismatch(_) => AsymStatus::DimensionMismatch,
        Error::NotHermitian(_)
        | Error::NotPsd(_)
        | Error::TraceNotOne(_)
        | Error::NonFinite(..)
        | Error::InvalidState(_)
        | Error::NotPure(_) => AsymStatus::InvalidState,
        Error::GroupMismatch(_) => AsymStatus::GroupMismatch,
        Error::NotTracePreserving(_) => AsymStatus::NotTracePreserving,
        Error::ZeroAsymmetry => AsymStatus::Infinite,
        Error::Numerical(_) => AsymStatus::Numerical,
        _ => AsymStatus::InvalidArgument,
    }
}

struct Fail(AsymStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(AsymStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AsymStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AsymStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            AsymStatus::Panic
        }
    }
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn complex_slice(data: *const f64, len: usize, what: &str) -> Result<Vec<Complex64>, Fail> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if data.is_null() {
        return Err(null(what));
    }
    let raw = std::slice::from_raw_parts(data, 2 * len);
    Ok(raw.chunks_exact(2).map(|p| Complex64::new(p[0], p[1])).collect())
}

unsafe fn generator_name(name: *const c_char) -> Result<String, Fail> {
    if name.is_null() {
        return Err(null("generator"));
    }
    CStr::from_ptr(name)
        .to_str()
        .map(str::to_owned)
        .map_err(|_| Fail(AsymStatus::InvalidArgument, "generator name is not UTF-8".into()))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn asym_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failure on this thread, or NULL if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn asym_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Builds a state from `dim * dim` interleaved complex entries (row-major).
///
/// # Safety
/// `data` must point to `2 * dim * dim` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn asym_state_new(dim: usize, data: *const f64, out: *mut *mut AsymState) -> AsymStatus {
    guard(|| {
        if dim == 0 {
            return Err(Fail(AsymStatus::InvalidArgument, "dim must be positive".into()));
        }
        let entries = complex_slice(data, dim * dim, "data")?;
        let rho = DensityOperator::new(ComplexMatrix::new(dim, dim, &entries)?)?;
        put(out, boxed(AsymState(rho)), "out")
    })
}

/// Builds the pure state `|psi><psi|` from `dim` interleaved amplitudes.
/// The vector must have unit norm.
///
/// # Safety
/// `amplitudes` must point to `2 * dim` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn asym_state_pure(dim: usize, amplitudes: *const f64, out: *mut *mut AsymState) -> AsymStatus {
    guard(|| {
        if dim == 0 {
            return Err(Fail(AsymStatus::InvalidArgument, "dim must be positive".into()));
        }
        let psi = complex_slice(amplitudes, dim, "amplitudes")?;
        put(out, boxed(AsymState(DensityOperator::pure(&psi)?)), "out")
    })
}

/// # Safety
/// `state` must come from this library and not be used afterwards; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn asym_state_free(state: *mut AsymState) {
    if !state.is_null() {
        drop(Box::from_raw(state));
    }
}

/// Dimension of the state, or 0 for NULL.
///
/// # Safety
/// `state` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn asym_state_dim(state: *const AsymState) -> usize {
    state.as_ref().map_or(0, |s| s.0.dim())
}

/// Copies the `dim * dim` interleaved entries into `out`.
///
/// # Safety
/// `out` must have room for `2 * dim * dim` doubles.
#[no_mangle]
pub unsafe extern "C" fn asym_state_matrix(state: *const AsymState, out: *mut f64) -> AsymStatus {
    guard(|| {
        let s = get(state, "state")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let d = s.0.dim();
        let dst = std::slice::from_raw_parts_mut(out, 2 * d * d);
        for i in 0..d {
            for j in 0..d {
                let z = s.0.matrix().get(i, j);
                dst[2 * (i * d + j)] = z.re;
                dst[2 * (i * d + j) + 1] = z.im;
            }
        }
        Ok(())
    })
}

/// Spin-j representation of SU(2) with `twice_j = 2j`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn asym_rep_spin(twice_j: u32, out: *mut *mut AsymRep) -> AsymStatus {
    guard(|| put(out, boxed(AsymRep(spin_j_representation(f64::from(twice_j) / 2.0)?)), "out"))
}

/// U(1) representation with number operator `diag(spectrum)`.
///
/// # Safety
/// `spectrum` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn asym_rep_u1(spectrum: *const i64, len: usize, out: *mut *mut AsymRep) -> AsymStatus {
    guard(|| {
        if spectrum.is_null() {
            return Err(null("spectrum"));
        }
        let spec = std::slice::from_raw_parts(spectrum, len);
        put(out, boxed(AsymRep(u1_number_representation(spec)?)), "out")
    })
}

/// Left regular representation of the cyclic group Z_n.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn asym_rep_regular_cyclic(n: usize, out: *mut *mut AsymRep) -> AsymStatus {
    guard(|| put(out, boxed(AsymRep(left_regular_representation(&cyclic_group(n)?))), "out"))
}

/// Z_n acting by the phases `exp(2 pi i k c / n)` with charges `c`.
///
/// # Safety
/// `charges` must point to `len` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn asym_rep_cyclic_phase(
    n: usize,
    charges: *const i64,
    len: usize,
    out: *mut *mut AsymRep,
) -> AsymStatus {
    guard(|| {
        if charges.is_null() {
            return Err(null("charges"));
        }
        let c = std::slice::from_raw_parts(charges, len);
        put(out, boxed(AsymRep(cyclic_phase_representation(n, c)?)), "out")
    })
}

/// Tensor product of two representations of the same group.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn asym_rep_tensor(a: *const AsymRep, b: *const AsymRep, out: *mut *mut AsymRep) -> AsymStatus {
    guard(|| {
        let r = tensor_representation(&get(a, "a")?.0, &get(b, "b")?.0)?;
        put(out, boxed(AsymRep(r)), "out")
    })
}

/// # Safety
/// `rep` must come from this library and not be used afterwards; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn asym_rep_free(rep: *mut AsymRep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// Dimension of the representation space, or 0 for NULL.
///
/// # Safety
/// `rep` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn asym_rep_dim(rep: *const AsymRep) -> usize {
    rep.as_ref().map_or(0, |r| r.0.dim())
}

/// Von Neumann entropy in bits.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn asym_entropy(state: *const AsymState, out: *mut f64) -> AsymStatus {
    guard(|| put(out, von_neumann_entropy(&get(state, "state")?.0)?, "out"))
}

/// Holevo asymmetry under the uniform (Haar) twirl, in bits.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn asym_holevo_uniform(
    state: *const AsymState,
    rep: *const AsymRep,
    out: *mut f64,
) -> AsymStatus {
    guard(|| {
        let rep = &get(rep, "rep")?.0;
        let density = uniform_density(rep, 0)?;
        put(out, measures::holevo_asymmetry(&get(state, "state")?.0, rep, &density)?, "out")
    })
}

/// Trace norm of `[rho, L]` for the named generator (`x`, `y`, `z` for
/// SU(2); `n` for U(1)).
///
/// # Safety
/// Handles must be live; `generator` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn asym_commutator(
    state: *const AsymState,
    rep: *const AsymRep,
    generator: *const c_char,
    out: *mut f64,
) -> AsymStatus {
    guard(|| {
        let l = get(rep, "rep")?.0.generator(&generator_name(generator)?)?.clone();
        put(out, measures::commutator_asymmetry(&get(state, "state")?.0, &l)?, "out")
    })
}

/// Wigner-Yanase-Dyson skew information of order `s`.
///
/// # Safety
/// Handles must be live; `generator` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn asym_skew(
    state: *const AsymState,
    rep: *const AsymRep,
    generator: *const c_char,
    s: f64,
    out: *mut f64,
) -> AsymStatus {
    guard(|| {
        let l = get(rep, "rep")?.0.generator(&generator_name(generator)?)?.clone();
        put(out, measures::skew_information(&get(state, "state")?.0, &l, s)?, "out")
    })
}

/// Builds a channel from `count` Kraus operators, each `output_dim x
/// input_dim`, stored consecutively as interleaved complex entries.
///
/// # Safety
/// `data` must point to `2 * count * output_dim * input_dim` doubles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn asym_channel_from_kraus(
    count: usize,
    output_dim: usize,
    input_dim: usize,
    data: *const f64,
    out: *mut *mut AsymChannel,
) -> AsymStatus {
    guard(|| {
        if count == 0 || output_dim == 0 || input_dim == 0 {
            return Err(Fail(AsymStatus::InvalidArgument, "count and dimensions must be positive".into()));
        }
        let block = output_dim * input_dim;
        let all = complex_slice(data, count * block, "data")?;
        let ops = all
            .chunks_exact(block)
            .map(|c| ComplexMatrix::new(output_dim, input_dim, c))
            .collect::<Result<Vec<_>, _>>()?;
        put(out, boxed(AsymChannel(KrausChannel::new(ops)?)), "out")
    })
}

/// # Safety
/// `channel` must come from this library and not be used afterwards; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn asym_channel_free(channel: *mut AsymChannel) {
    if !channel.is_null() {
        drop(Box::from_raw(channel));
    }
}

/// Applies the channel; the result is a new state handle.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn asym_channel_apply(
    channel: *const AsymChannel,
    state: *const AsymState,
    out: *mut *mut AsymState,
) -> AsymStatus {
    guard(|| {
        let rho = apply_channel(&get(channel, "channel")?.0, &get(state, "state")?.0)?;
        put(out, boxed(AsymState(rho)), "out")
    })
}

/// Tests whether the channel commutes with the group action. Writes the
/// verdict and the largest deviation found.
///
/// # Safety
/// Handles must be live; `symmetric` and `max_deviation` writable.
#[no_mangle]
pub unsafe extern "C" fn asym_channel_is_symmetric(
    channel: *const AsymChannel,
    rep: *const AsymRep,
    tol: f64,
    symmetric: *mut bool,
    max_deviation: *mut f64,
) -> AsymStatus {
    guard(|| {
        if symmetric.is_null() || max_deviation.is_null() {
            return Err(null("out"));
        }
        let check = is_symmetric_channel(&get(channel, "channel")?.0, &get(rep, "rep")?.0, tol)?;
        put(symmetric, check.symmetric, "symmetric")?;
        put(max_deviation, check.max_deviation, "max_deviation")
    })
}
