# Independent MT19937-64 plus rejection sampling; prints the golden generator files used by test_io.cpp.
class MT64:
    def __init__(self, seed):
        self.mt = [0]*312; self.i = 312
        self.mt[0] = seed & 0xFFFFFFFFFFFFFFFF
        for k in range(1, 312):
            self.mt[k] = (6364136223846793005 * (self.mt[k-1] ^ (self.mt[k-1] >> 62)) + k) & 0xFFFFFFFFFFFFFFFF
    def __call__(self):
        if self.i >= 312:
            for k in range(312):
                x = (self.mt[k] & 0xFFFFFFFF80000000) | (self.mt[(k+1) % 312] & 0x7FFFFFFF)
                xa = x >> 1
                if x & 1: xa ^= 0xB5026F5AA96619E9
                self.mt[k] = self.mt[(k+156) % 312] ^ xa
            self.i = 0
        y = self.mt[self.i]; self.i += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & 0xFFFFFFFFFFFFFFFF
M = 2**64 - 1
def uni(r, lo, hi):
    rng = hi - lo + 1
    rej = M - ((M % rng) + 1) % rng
    while True:
        x = r()
        if x <= rej: return lo + x % rng
def gen(n, kt, kh, a, b, g, w, fmin, fmax, seed):
    r = MT64(seed)
    out = ["omuco 1", f"n {n} alpha {a} beta {b} gamma {g}" + (f" w {w}" if w is not None else "")]
    out.append("tilde " + (f"K {kt} " + " ".join(str(uni(r,1,kt)) for _ in range(n)) if a else "none").rstrip())
    out.append("hat " + (f"K {kh} " + " ".join(str(uni(r,1,kh)) for _ in range(n)) if b else "none").rstrip())
    out.append("f " + (" ".join(str(uni(r,fmin,fmax)) for _ in range(n)) if g else "none"))
    return "\n".join(out) + "\n"
r = MT64(5489)
for _ in range(9999): r()
print("10000th default:", r())
for args in [(12,2,2,1,1,-1,None,0,100,1),(8,3,0,-1,0,1,3,0,9,42),(10,1,3,0,-1,1,4,5,20,18446744073709551615)]:
    print(repr(gen(*args)))
