//! wasm-bindgen exports for the static page in `www/`.

use qpows_cli::{run_eval, Settings};
use wasm_bindgen::prelude::*;

fn settings(order: &str) -> Result<Settings, String> {
    let mut s = Settings::default();
    if !order.trim().is_empty() {
        s.set_order_by_name(order.trim())
            .map_err(|e| e.to_string())?;
    }
    Ok(s)
}

fn eval_with(expr: &str, order: &str) -> Result<String, String> {
    let s = settings(order)?;
    run_eval(expr, &s, false).map_err(|e| e.to_string())
}

/// Evaluates one expression of the command-line language.
#[wasm_bindgen]
pub fn evaluate(expr: &str, order: &str) -> Result<String, JsError> {
    eval_with(expr, order).map_err(|e| JsError::new(&e))
}

/// Expands `P_α` in the monomial and fundamental bases. `alpha` is a comma
/// separated list of parts. Returns the two lines joined by a newline.
#[wasm_bindgen]
pub fn powersum(alpha: &str, order: &str) -> Result<String, JsError> {
    let run = || -> Result<String, String> {
        let idx = format!("[{}]", alpha.trim());
        let m = eval_with(&format!("convert(P{idx}, M)"), order)?;
        let f = eval_with(&format!("convert(P{idx}, F)"), order)?;
        Ok(format!("{m}\n{f}"))
    };
    run().map_err(|e| JsError::new(&e))
}

/// Expands `P_Φ` in NCQSym and reports its projection data. `phi` uses the
/// block syntax `1,4|2|3`.
#[wasm_bindgen]
pub fn set_powersum(phi: &str, order: &str) -> Result<String, JsError> {
    let run = || -> Result<String, String> {
        let idx = format!("{{{}}}", phi.trim());
        let m = eval_with(&format!("convert(Pn{idx}, Mn)"), order)?;
        let c = eval_with(&format!("rhoc({idx})"), order)?;
        let t = eval_with(&format!("rhot({idx})"), order)?;
        let f = eval_with(&format!("projectf({idx})"), order).unwrap_or_else(|e| format!("({e})"));
        Ok(format!("{m}\nrho_C = {c}, rho_T = {t}\n{f}"))
    };
    run().map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports_run_natively() {
        assert_eq!(
            eval_with("convert(P[2,1,2], M)", "").unwrap(),
            "2*M[2,1,2] + 2*M[3,2]"
        );
        assert!(eval_with("M[1]", "nosuch").is_err());
        assert_eq!(
            eval_with("convert(P[2,3,4,2,6], M)", "evenodd").unwrap(),
            "2*M[2,3,4,2,6] + 2*M[2,3,6,6] + 2*M[5,4,2,6] + 2*M[5,6,6]"
        );
    }
}
