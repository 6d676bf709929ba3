"""Independent high-precision oracle for frozen test constants.

Uses closed-form inverses (sympy) and mpmath quadrature; shares no code with
the C++ implementation.
"""
import mpmath as mp
import sympy as sp

mp.mp.dps = 40
th = sp.symbols("theta", nonnegative=True)

# M/M/1-type: drift -1, rate 1, Exp(2) jumps. phi(a) = a - a/(2+a).
mm1_inv = ((th - 1) + sp.sqrt((1 - th) ** 2 + 8 * th)) / 2
bm_inv = sp.sqrt(1 + 2 * th) - 1

def derivs(expr, n):
    return [sp.N(sp.diff(expr, th, k).subs(th, 0), 30) for k in range(1, n + 1)]

print("bm inverse derivs", derivs(bm_inv, 6))
print("mm1 inverse derivs", derivs(mm1_inv, 6))
print("mm1 phi_inv(1.5)", sp.N(mm1_inv.subs(th, sp.Rational(3, 2)), 30))

f = sp.lambdify(th, mm1_inv, "mpmath")
for a in [0.25, 0.5, 1, 2]:
    val = mp.e ** (-mp.quad(lambda y: f(a * y), [0, 1]))
    print("mm1 lst h=t x=1 alpha", a, mp.nstr(val, 20))
# two-level x=1, y=2, h=t
a = 1
val = mp.e ** (-f(a * 1) * 1 - mp.quad(lambda z: f(a * z), [0, 1]))
print("mm1 two-level x=1 y=2 alpha=1", mp.nstr(val, 20))
# fidi s=(1,2), alpha=(0.5,0.5), h=t
def fidi():
    s = [0, 1, 2]
    al = [0.5, 0.5]
    tot = mp.mpf(0)
    for j in range(1, 3):
        xj = s[j] - s[j - 1]
        tot += mp.quad(lambda t: f(sum(al[i - 1] * (s[i] - s[j] + t) for i in range(j, 3))), [0, xj])
    return mp.e ** (-tot)
print("mm1 fidi", mp.nstr(fidi(), 20))

# skewness of A_n for h=t (CLT KS budget)
d = derivs(mm1_inv, 3)
k2, k3 = -d[1], d[2]
for n in [200]:
    skew = (k3 * n**4 / 4) / (k2 * n**3 / 3) ** 1.5
    print("mm1 skew A_200", skew)

# Brownian: drift -1, sigma2 1. h(t) = sqrt(t), x = 1, alpha = 1.
g = sp.lambdify(th, bm_inv, "mpmath")
print("bm lst h=sqrt x=1 alpha=1", mp.nstr(mp.e ** (-mp.quad(lambda y: g(mp.sqrt(y)), [0, 1])), 20))

# Exponents of the other catalog laws, evaluated directly.
a = mp.mpf("1.3")
print("gamma phi(1.3)", mp.nstr(2 * a + (1 + a / 2) ** -2 - 1, 20))  # d=-2, rate 1, Gamma(2, 0.5)
for a in [mp.mpf("1e-3"), mp.mpf("2.5")]:  # d=-1, rate 2, U(0, 0.6)
    print("uniform phi", a, mp.nstr(a + 2 * ((1 - mp.e ** (-0.6 * a)) / (0.6 * a) - 1), 20))
det = lambda al: al + mp.e ** (-al / 2) - 1  # d=-1, rate 1, size 0.5
det_inv = lambda t: mp.findroot(lambda al: det(al) - t, 1)
print("det phi_inv(1)", mp.nstr(det_inv(1), 20))
print("det lst h=t x=1 alpha=1", mp.nstr(mp.e ** (-mp.quad(lambda y: det_inv(y), [0, 1])), 20))

# Piecewise linear h through (0,0), (0.5,1), flat after; M/M/1, x = 1.5, alpha = 1.
pw = lambda y: 2 * y if y < 0.5 else 1
print("mm1 lst piecewise x=1.5", mp.nstr(mp.e ** (-mp.quad(lambda y: f(pw(y)), [0, 0.5, 1.5])), 20))

# Joint LST of (A_1, T_1) with h = t, alpha = beta = 0.5.
print("mm1 joint lst", mp.nstr(mp.e ** (-mp.quad(lambda y: f(0.5 * y + 0.5), [0, 1])), 20))

# Gaussian-limit covariance kernel, index 0.5, Var T_1 = 1, x = 1, y = 0.5.
print("gauss cov 0.5", mp.nstr(mp.quad(lambda s: mp.sqrt(s * (0.5 + s)), [0, 1]), 20))
