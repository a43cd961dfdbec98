"""Meixner polynomials: exact oracle and uniform asymptotics."""
