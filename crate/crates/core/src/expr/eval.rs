use std::f64::consts::PI;

use thiserror::Error;

use super::ast::{BinOp, Expr, ExprKind, Func, Var};
use super::jet::{Jet, Jet2, Jet4};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainReason {
    LogNonPositive,
    SqrtNonPositive,
    DivisionByZero,
    TanPole,
    PowNonPositiveBase,
    UnboundVariable,
    NonFinite,
}

impl DomainReason {
    fn describe(self) -> &'static str {
        match self {
            DomainReason::LogNonPositive => "log of a non-positive value",
            DomainReason::SqrtNonPositive => "sqrt of a non-positive value",
            DomainReason::DivisionByZero => "division by zero",
            DomainReason::TanPole => "tan at a pole",
            DomainReason::PowNonPositiveBase => "non-integer power of a non-positive base",
            DomainReason::UnboundVariable => "variable not available here",
            DomainReason::NonFinite => "non-finite result",
        }
    }
}

/// Evaluation left the domain of a sub-expression.
#[derive(Clone, Debug, PartialEq, Error)]
#[error("domain error: {} in `{expr}` at byte {offset}", .reason.describe())]
pub struct EvalError {
    pub reason: DomainReason,
    /// Offending sub-expression, serialized.
    pub expr: String,
    pub offset: usize,
}

impl Expr {
    /// Second-order jet of the expression at `(t, r)`.
    pub fn eval_jet(&self, t: f64, r: f64) -> Result<Jet2, EvalError> {
        self.eval_with(&|v| match v {
            Var::T => Some(Jet2::t(t)),
            Var::R => Some(Jet2::r(r)),
            _ => None,
        })
    }

    /// Second-order jet in all four coordinates `(t, r, theta, phi)`.
    pub fn eval_jet4(&self, x: [f64; 4]) -> Result<Jet4, EvalError> {
        self.eval_with(&|v| Some(Jet4::variable(v.index(), x[v.index()])))
    }

    pub fn eval_value(&self, t: f64, r: f64) -> Result<f64, EvalError> {
        Ok(self.eval_jet(t, r)?.v)
    }

    pub fn eval_with<const N: usize>(
        &self,
        env: &dyn Fn(Var) -> Option<Jet<N>>,
    ) -> Result<Jet<N>, EvalError> {
        let out = match &self.kind {
            ExprKind::Num(v) => Jet::constant(*v),
            ExprKind::Pi => Jet::constant(PI),
            ExprKind::Var(v) => env(*v).ok_or_else(|| self.fail(DomainReason::UnboundVariable))?,
            ExprKind::Neg(a) => -a.eval_with(env)?,
            ExprKind::Binary(op, a, b) => {
                let x = a.eval_with(env)?;
                match op {
                    BinOp::Add => x + b.eval_with(env)?,
                    BinOp::Sub => x - b.eval_with(env)?,
                    BinOp::Mul => x * b.eval_with(env)?,
                    BinOp::Div => {
                        let y = b.eval_with(env)?;
                        if y.v == 0.0 {
                            return Err(self.fail(DomainReason::DivisionByZero));
                        }
                        x / y
                    }
                    BinOp::Pow => match b.literal_integer() {
                        Some(n) => {
                            if n < 0 && x.v == 0.0 {
                                return Err(self.fail(DomainReason::DivisionByZero));
                            }
                            x.powi(n)
                        }
                        None => {
                            if x.v <= 0.0 {
                                return Err(self.fail(DomainReason::PowNonPositiveBase));
                            }
                            x.powf(&b.eval_with(env)?)
                        }
                    },
                }
            }
            ExprKind::Call(f, a) => {
                let x = a.eval_with(env)?;
                match f {
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Tan => {
                        if x.v.cos() == 0.0 {
                            return Err(self.fail(DomainReason::TanPole));
                        }
                        x.tan()
                    }
                    Func::Exp => x.exp(),
                    Func::Log => {
                        if x.v <= 0.0 {
                            return Err(self.fail(DomainReason::LogNonPositive));
                        }
                        x.ln()
                    }
                    Func::Sqrt => {
                        if x.v <= 0.0 {
                            return Err(self.fail(DomainReason::SqrtNonPositive));
                        }
                        x.sqrt()
                    }
                    Func::Sinh => x.sinh(),
                    Func::Cosh => x.cosh(),
                    Func::Tanh => x.tanh(),
                }
            }
        };
        if !out.is_finite() {
            return Err(self.fail(DomainReason::NonFinite));
        }
        Ok(out)
    }

    fn fail(&self, reason: DomainReason) -> EvalError {
        EvalError {
            reason,
            expr: self.to_string(),
            offset: self.span.start,
        }
    }
}
