#!/usr/bin/env python3
"""Independent reference evaluation of the rain, fog and gas models.

Written separately from the Rust crate (own table transcription, vectorised
numpy evaluation) and used to produce the frozen golden values in
crates/core/tests/golden/oracle_points.csv.

Usage: python3 tools/oracle.py > crates/core/tests/golden/oracle_points.csv
"""
import sys
import numpy as np

# ---- ITU-R P.838-3 regression coefficients -------------------------------
P838 = {
    "kH": ([-5.33980, -0.35351, -0.23789, -0.94158],
           [-0.10008, 1.26970, 0.86036, 0.64552],
           [1.13098, 0.45400, 0.15354, 0.16817], -0.18961, 0.71147),
    "kV": ([-3.80595, -3.44965, -0.39902, 0.50167],
           [0.56934, -0.22911, 0.73042, 1.07319],
           [0.81061, 0.51059, 0.11899, 0.27195], -0.16398, 0.63297),
    "aH": ([-0.14318, 0.29591, 0.32177, -5.37610, 16.1721],
           [1.82442, 0.77564, 0.63773, -0.96230, -3.29980],
           [-0.55187, 0.19822, 0.13164, 1.47828, 3.43990], 0.67849, -1.95537),
    "aV": ([-0.07771, 0.56727, -0.20238, -48.2991, 48.5833],
           [2.33840, 0.95545, 1.14520, 0.791669, 0.791459],
           [-0.76284, 0.54039, 0.26809, 0.116226, 0.116479], -0.053739, 0.83433),
}


def p838(name, f):
    a, b, c, m, cc = (np.asarray(v) if isinstance(v, list) else v for v in P838[name])
    x = np.log10(f)
    s = np.sum(a * np.exp(-((x - b) / c) ** 2)) + m * x + cc
    return 10 ** s if name.startswith("k") else s


def rain_gamma(f, rate, tau_deg=0.0, el_deg=0.0):
    kh, kv, ah, av = p838("kH", f), p838("kV", f), p838("aH", f), p838("aV", f)
    g = np.cos(np.radians(el_deg)) ** 2 * np.cos(np.radians(2 * tau_deg))
    k = (kh + kv + (kh - kv) * g) / 2
    alpha = (kh * ah + kv * av + (kh * ah - kv * av) * g) / (2 * k)
    return k * rate ** alpha


# ---- ITU-R P.840 double-Debye -------------------------------------------
def fog_kl(f, T):
    th = 300.0 / T
    e0 = 77.66 + 103.3 * (th - 1)
    e1, e2 = 5.48, 3.51
    fp = 20.09 - 142 * (th - 1) + 294 * (th - 1) ** 2
    fs = 590 - 1500 * (th - 1)
    epp = f * (e0 - e1) / (fp * (1 + (f / fp) ** 2)) + f * (e1 - e2) / (fs * (1 + (f / fs) ** 2))
    ep = (e0 - e1) / (1 + (f / fp) ** 2) + (e1 - e2) / (1 + (f / fs) ** 2) + e2
    eta = (2 + ep) / epp
    return 0.819 * f / (epp * (1 + eta ** 2))


# ---- ITU-R P.676-10 line-by-line ----------------------------------------
OX = np.array([
    [50.474214, 0.975, 9.651, 6.690, 0.0, 2.566, 6.850],
    [50.987745, 2.529, 8.653, 7.170, 0.0, 2.246, 6.800],
    [51.503360, 6.193, 7.709, 7.640, 0.0, 1.947, 6.729],
    [52.021429, 14.320, 6.819, 8.110, 0.0, 1.667, 6.640],
    [52.542418, 31.240, 5.983, 8.580, 0.0, 1.388, 6.526],
    [53.066934, 64.290, 5.201, 9.060, 0.0, 1.349, 6.206],
    [53.595775, 124.600, 4.474, 9.550, 0.0, 2.227, 5.085],
    [54.130025, 227.300, 3.800, 9.960, 0.0, 3.170, 3.750],
    [54.671180, 389.700, 3.182, 10.370, 0.0, 3.558, 2.654],
    [55.221384, 627.100, 2.618, 10.890, 0.0, 2.560, 2.952],
    [55.783815, 945.300, 2.109, 11.340, 0.0, -1.172, 6.135],
    [56.264774, 543.400, 0.014, 17.030, 0.0, 3.525, -0.978],
    [56.363399, 1331.800, 1.654, 11.890, 0.0, -2.378, 6.547],
    [56.968211, 1746.600, 1.255, 12.230, 0.0, -3.545, 6.451],
    [57.612486, 2120.100, 0.910, 12.620, 0.0, -5.416, 6.056],
    [58.323877, 2363.700, 0.621, 12.950, 0.0, -1.932, 0.436],
    [58.446588, 1442.100, 0.083, 14.910, 0.0, 6.768, -1.273],
    [59.164204, 2379.900, 0.387, 13.530, 0.0, -6.561, 2.309],
    [59.590983, 2090.700, 0.207, 14.080, 0.0, 6.957, -0.776],
    [60.306056, 2103.400, 0.207, 14.150, 0.0, -6.395, 0.699],
    [60.434778, 2438.000, 0.386, 13.390, 0.0, 6.342, -2.825],
    [61.150562, 2479.500, 0.621, 12.920, 0.0, 1.014, -0.584],
    [61.800158, 2275.900, 0.910, 12.630, 0.0, 5.014, -6.619],
    [62.411220, 1915.400, 1.255, 12.170, 0.0, 3.029, -6.759],
    [62.486253, 1503.000, 0.083, 15.130, 0.0, -4.499, 0.844],
    [62.997984, 1490.200, 1.654, 11.740, 0.0, 1.856, -6.675],
    [63.568526, 1078.000, 2.108, 11.340, 0.0, 0.658, -6.139],
    [64.127775, 728.700, 2.617, 10.880, 0.0, -3.036, -2.895],
    [64.678910, 461.300, 3.181, 10.380, 0.0, -3.968, -2.590],
    [65.224078, 274.000, 3.800, 9.960, 0.0, -3.528, -3.680],
    [65.764779, 153.000, 4.473, 9.550, 0.0, -2.548, -5.002],
    [66.302096, 80.400, 5.200, 9.060, 0.0, -1.660, -6.091],
    [66.836834, 39.800, 5.982, 8.580, 0.0, -1.680, -6.393],
    [67.369601, 18.560, 6.818, 8.110, 0.0, -1.956, -6.475],
    [67.900868, 8.172, 7.708, 7.640, 0.0, -2.216, -6.545],
    [68.431006, 3.397, 8.652, 7.170, 0.0, -2.492, -6.600],
    [68.960312, 1.334, 9.650, 6.690, 0.0, -2.773, -6.650],
    [118.750334, 940.300, 0.010, 16.640, 0.0, -0.439, 0.079],
    [368.498246, 67.400, 0.048, 16.400, 0.0, 0.000, 0.000],
    [424.763020, 637.700, 0.044, 16.400, 0.0, 0.000, 0.000],
    [487.249273, 237.400, 0.049, 16.000, 0.0, 0.000, 0.000],
    [715.392902, 98.100, 0.145, 16.000, 0.0, 0.000, 0.000],
    [773.839490, 572.300, 0.141, 16.200, 0.0, 0.000, 0.000],
    [834.145546, 183.100, 0.145, 14.700, 0.0, 0.000, 0.000],
])

WV = np.array([
    [22.235080, 0.1079, 2.144, 26.38, 0.76, 5.087, 1.00],
    [67.803960, 0.0011, 8.732, 28.58, 0.69, 4.930, 0.82],
    [119.995940, 0.0007, 8.353, 29.48, 0.70, 4.780, 0.79],
    [183.310087, 2.273, 0.668, 29.06, 0.77, 5.022, 0.85],
    [321.225630, 0.0470, 6.179, 24.04, 0.67, 4.398, 0.54],
    [325.152888, 1.514, 1.541, 28.23, 0.64, 4.893, 0.74],
    [336.227764, 0.0010, 9.825, 26.93, 0.69, 4.740, 0.61],
    [380.197353, 11.67, 1.048, 28.11, 0.54, 5.063, 0.89],
    [390.134508, 0.0045, 7.347, 21.52, 0.63, 4.810, 0.55],
    [437.346667, 0.0632, 5.048, 18.45, 0.60, 4.230, 0.48],
    [439.150807, 0.9098, 3.595, 20.07, 0.63, 4.483, 0.52],
    [443.018343, 0.1920, 5.048, 15.55, 0.60, 5.083, 0.50],
    [448.001085, 10.41, 1.405, 25.64, 0.66, 5.028, 0.67],
    [470.888999, 0.3254, 3.597, 21.34, 0.66, 4.506, 0.65],
    [474.689092, 1.260, 2.379, 23.20, 0.65, 4.804, 0.64],
    [488.490108, 0.2529, 2.852, 25.86, 0.69, 5.201, 0.72],
    [503.568532, 0.0372, 6.731, 16.12, 0.61, 3.980, 0.43],
    [504.482692, 0.0124, 6.731, 16.12, 0.61, 4.010, 0.45],
    [547.676440, 0.9785, 0.158, 26.00, 0.70, 4.500, 1.00],
    [552.020960, 0.1840, 0.158, 26.00, 0.70, 4.500, 1.00],
    [556.935985, 497.0, 0.159, 30.86, 0.69, 4.552, 1.00],
    [620.700807, 5.015, 2.391, 24.38, 0.71, 4.856, 0.68],
    [645.766085, 0.0067, 8.633, 18.00, 0.60, 4.000, 0.50],
    [658.005280, 0.2732, 7.816, 32.10, 0.69, 4.140, 1.00],
    [752.033113, 243.4, 0.396, 30.86, 0.68, 4.352, 0.84],
    [841.051732, 0.0134, 8.113, 15.90, 0.33, 5.760, 0.45],
    [859.965698, 0.1325, 7.989, 30.60, 0.68, 4.090, 0.84],
    [899.303175, 0.0547, 7.845, 29.85, 0.68, 4.530, 0.90],
    [902.611085, 0.0386, 8.360, 28.65, 0.70, 5.100, 0.95],
    [906.205957, 0.1836, 5.039, 24.08, 0.70, 4.700, 0.53],
    [916.171582, 8.400, 1.310, 26.73, 0.70, 5.150, 0.78],
    [923.112692, 0.0079, 8.136, 29.00, 0.70, 5.000, 0.80],
    [970.315022, 9.009, 1.846, 25.50, 0.64, 4.940, 0.67],
    [987.926764, 134.6, 0.180, 29.85, 0.68, 4.550, 0.90],
    [1780.000000, 17506.0, 0.000, 196.3, 2.00, 24.15, 5.00],
])


def _shape(f, fi, df, delta):
    return f / fi * ((df - delta * (fi - f)) / ((fi - f) ** 2 + df ** 2)
                     + (df - delta * (fi + f)) / ((fi + f) ** 2 + df ** 2))


def gas_gamma(f, p, T, rho):
    th = 300.0 / T
    e = rho * T / 216.7
    fi, a1, a2, a3, a4, a5, a6 = OX.T
    s = a1 * 1e-7 * p * th ** 3 * np.exp(a2 * (1 - th))
    df = a3 * 1e-4 * (p * th ** (0.8 - a4) + 1.1 * e * th)
    df = np.sqrt(df ** 2 + 2.25e-6)
    delta = (a5 + a6 * th) * 1e-4 * (p + e) * th ** 0.8
    n_ox = np.sum(s * _shape(f, fi, df, delta))
    d = 5.6e-4 * (p + e) * th ** 0.8
    n_d = f * p * th ** 2 * (6.14e-5 / (d * (1 + (f / d) ** 2))
                             + 1.4e-12 * p * th ** 1.5 / (1 + 1.9e-5 * f ** 1.5))
    fi, b1, b2, b3, b4, b5, b6 = WV.T
    s = b1 * 1e-1 * e * th ** 3.5 * np.exp(b2 * (1 - th))
    df = b3 * 1e-4 * (p * th ** b4 + b5 * e * th ** b6)
    df = 0.535 * df + np.sqrt(0.217 * df ** 2 + 2.1316e-12 * fi ** 2 / th)
    n_w = np.sum(s * _shape(f, fi, df, 0.0))
    return 0.1820 * f * (n_ox + n_d), 0.1820 * f * n_w


def main():
    rng = np.random.default_rng(20131001)
    w = sys.stdout.write
    w("kind,freq_ghz,p1,p2,p3,value\n")

    def row(kind, *vals):
        w(kind + "," + ",".join(repr(float(v)) for v in vals) + "\n")
    # gas: p1 = dry pressure hPa, p2 = temperature K, p3 = vapour density g/m3
    fixed = [(1013.25, 288.15, 7.5, f) for f in (1.0, 10.0, 22.235, 28.0, 38.0, 57.0, 60.0,
                                                 63.0, 80.0, 118.75, 140.0, 183.31, 240.0, 300.0,
                                                 557.0, 1000.0)]
    rand = [(rng.uniform(500, 1100), rng.uniform(240, 310), rng.uniform(0, 20), rng.uniform(1, 1000))
            for _ in range(14)]
    for p, T, rho, f in fixed + rand:
        o, wv = gas_gamma(f, p, T, rho)
        row("gas_oxygen", f, p, T, rho, o)
        row("gas_water", f, p, T, rho, wv)
    # fog: p1 = temperature K, p2 = water density g/m3
    fixed = [(f, 288.15, 0.5) for f in (10.0, 28.0, 30.0, 60.0, 100.0, 150.0, 200.0)]
    rand = [(rng.uniform(1, 200), rng.uniform(233, 313), rng.uniform(0.01, 1.0)) for _ in range(16)]
    for f, T, m in fixed + rand:
        row("fog", f, T, m, 0.0, fog_kl(f, T) * m)
    # rain: p1 = rate mm/h, p2 = tilt deg, p3 = elevation deg
    fixed = [(f, 25.0, 0.0, 0.0) for f in (10.0, 28.0, 38.0, 60.0, 100.0, 300.0)]
    rand = [(10 ** rng.uniform(0, 3), rng.uniform(0, 150), rng.uniform(0, 90), rng.uniform(-90, 90))
            for _ in range(14)]
    for f, r, tau, el in fixed + rand:
        row("rain", f, r, tau, el, rain_gamma(f, r, tau, el))


if __name__ == "__main__":
    if len(sys.argv) > 1 and sys.argv[1] == "check":
        for f in (1, 10, 20, 28, 30, 100, 1000):
            print(f, [round(float(p838(n, f)), 6) for n in ("kH", "aH", "kV", "aV")])
        for f in (22.235, 28, 38, 50, 55, 58, 60, 62, 65, 75, 80, 90, 118.75, 140, 183.31, 240, 280, 300):
            o, wv = gas_gamma(f, 1013.25, 288.15, 7.5)
            print("gas", f, o, wv, o + wv)
        for f in (10, 28, 30, 100, 150, 200):
            print("fog Kl", f, fog_kl(f, 288.15))
        print("rain 28 25", rain_gamma(28, 25), rain_gamma(28, 16), rain_gamma(28, 30))
    else:
        main()
