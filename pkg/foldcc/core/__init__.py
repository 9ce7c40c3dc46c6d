"""Prime-field arithmetic, polynomials and linear algebra over F_q."""
