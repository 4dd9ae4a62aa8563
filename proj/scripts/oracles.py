# Independent high-precision oracle values, frozen into the C++ test suite.
# Run: python3 scripts/oracles.py
from mpmath import mp, mpf, cosh, sinh, acosh, asinh, sqrt, exp, log, pi, cbrt, findroot

mp.dps = 40

def P(name, v):
    print(f"{name} = {mp.nstr(v, 25)}")

print("== trace / length ==")
P("len_tr3", 2*acosh(mpf(3)/2))                      # modular torus systole
P("len_tr6", 2*acosh(mpf(6)/2))
P("len_tr15", 2*acosh(mpf(15)/2))
P("tr_of_len4", 2*cosh(mpf(4)/2))

print("== collar ==")
for l in ("0.5", "1", "2", "3.5"):
    l = mpf(l)
    P(f"collar({l})", asinh(1/sinh(l/2)))

print("== hexagon perp: cosh c = (cosh(lg/2)+cosh(ld/2)^2)/sinh(ld/2)^2 ==")
for lg, ld in [("1","1"), ("2","3"), ("0.7","2.4")]:
    lg, ld = mpf(lg), mpf(ld)
    c = acosh((cosh(lg/2)+cosh(ld/2)**2)/sinh(ld/2)**2)
    P(f"hex({lg},{ld})", c)

print("== pentagon perp: cosh^2(c/2) = (cosh^2(lg/4)+cosh^2(ld/2)-1)/(cosh^2(ld/2)-1) ==")
for lg, ld in [("1","1"), ("2","3"), ("0.7","2.4")]:
    lg, ld = mpf(lg), mpf(ld)
    c = 2*acosh(sqrt((cosh(lg/4)**2+cosh(ld/2)**2-1)/(cosh(ld/2)**2-1)))
    P(f"pent({lg},{ld})", c)

print("== quad: cosh(ld'/2) = cosh(c/2) cosh(ld/4) ==")
for c, ld in [("1","1"), ("2.2","0.9")]:
    c, ld = mpf(c), mpf(ld)
    P(f"quad({c},{ld})", 2*acosh(cosh(c/2)*cosh(ld/4)))

print("== modular torus anchor ==")
lstar = 2*acosh(mpf(3)/2)
P("lstar", lstar)
# hexagon perp between a cuff and itself under the dual pants construction:
c = acosh((cosh(lstar/2)+cosh(lstar/2)**2)/sinh(lstar/2)**2)
P("c_mod (expect acosh(13/5))", c)
P("acosh(13/5)", acosh(mpf(13)/5))
P("trB_half_twist = 2 cosh(c/2) cosh(l/4)", 2*cosh(c/2)*cosh(lstar/4))
P("trB_zero_twist = 2 cosh(c/2)", 2*cosh(c/2))

print("== cubic / once-punctured-torus maximal systole ==")
# 2x^3 - 3x^2 + 1 = C has root structure; cusped torus max systole: x = cosh(l/2) with
# 4 cosh^2(l/4) relation... the cusped modular torus systole is 2 acosh(3/2).
# Half-twist family: b-boundary version x3' = cosh(b/6)+1/2
for b in ("0.5", "2", "6"):
    b = mpf(b)
    Cc = cosh(b/6) + mpf(1)/2
    P(f"x3p({b}) = cosh(b/6)+1/2", Cc)
    # verify cubic: 2x^3-3x^2+1 - C = 0 with C = cosh^2(lg/4), u = e^{b/2}
    u = exp(b/2)
    C = ((u+1)**2/(4*u))* (2*cosh(b/6)-1)**2 / 1  # placeholder, do direct root instead
    x = Cc
    lhs = 2*x**3 - 3*x**2 + 1
    P(f"  C({b}) = 2x^3-3x^2+1", lhs)
    # l_gamma from C = cosh^2(l/4): l = 4 acosh(sqrt(C))
    P(f"  lgam({b})", 4*acosh(sqrt(lhs)))

print("== jenni / genus-2 bounds ==")
P("bolza_sys = 2 acosh(1+sqrt2)", 2*acosh(1+sqrt(2)))
P("cosh(bolza/2)", cosh(acosh(1+sqrt(2))))
P("spectra_cutoff_start", 2*acosh(1+sqrt(2))+1)

print("== gendulphe ==")
p = lambda x: 32*x**5 - 32*x**4 - 24*x**3 + 24*x**2 - 1
x0 = findroot(p, mpf("1.07"))
P("x0", x0)
P("B20 = 12 acosh(x0)", 12*acosh(x0))
P("buser_low g=2 = sqrt(12)-2", sqrt(mpf(12))-2)
P("buser_high g=2 = 6 sqrt(3 pi)", 6*sqrt(3*pi))
P("p(1.06)", p(mpf("1.06")))
P("p(1.08)", p(mpf("1.08")))

print("== mcshane check: modular torus ==")
# sum over simple slopes 1/(1+e^l); leading terms from trace tree (3,3,3)-root Markov
# traces t -> l = 2 acosh(t/2). Markov triples give simple traces 3,3,3? On the cusped
# modular torus simple traces are 3*Markov numbers: 3,6,15,39,87,102,...
markov = [1,2,5,13,29,34,89,169,194]
s = mpf(0)
# multiplicity: each Markov number appears for each slope; count from tree... just sanity partial
for m in markov:
    t = 3*m
    l = 2*acosh(mpf(t)/2)
    s += 1/(1+exp(l))
print("partial mcshane (no multiplicities):", mp.nstr(s, 12))

print("== huber asymptotic e^L/L at L=12 ==")
L = mpf(12)
P("e^12/12", exp(L)/L)

print("== fn anchor: pants seam endpoints ==")
# l1=l2=l3=lstar pants: p = tanh^2(l2/4), rho1 = tanh^2(l1/4)
P("p(lstar) = tanh^2(lstar/4)", (sinh(lstar/4)/cosh(lstar/4))**2)
