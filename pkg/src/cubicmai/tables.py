"""Published reference tables for the piecewise concavity bound.

Each row bounds M(k) on the grid cell [0.001k, 0.001(k+1)):
columns are A4 (at the left endpoint for k <= 34, right endpoint for
k >= 36), -ln(z1(0.001k)), ln(z2(0.001k)), the two negated squared-slope
fractions, and the resulting M bound.  Values are stored exactly as
printed; the number of printed decimals varies by column, so comparisons
use a per-entry tolerance derived from the printed precision.
"""

from __future__ import annotations

from typing import List, Tuple

# k, A4, -ln z1, ln z2, frac1, frac2, M
TABLE_M1: List[Tuple[int, str, str, str, str, str, str]] = [
    (0, "135.9762", "2.553562", "0.05277836", "-166.7356", "-20.83335", "19.7"),
    (1, "132.6679", "2.507105", "0.04831009", "-161.790", "-21.1686", "19.6"),
    (2, "129.6543", "2.462392", "0.04379588", "-157.2333", "-21.50947", "19.5"),
    (3, "126.903", "2.419288", "0.03923514", "-153.0194", "-21.85574", "19.3"),
    (4, "124.384", "2.377674", "0.03462729", "-149.1122", "-22.20758", "19.1"),
    (5, "122.0728", "2.33745", "0.02997174", "-145.4794", "-22.56505", "18.8"),
    (6, "119.9504", "2.298492", "0.02526786", "-142.0935", "-22.92824", "18.5"),
    (7, "117.9977", "2.260743", "0.02051507", "-138.9302", "-23.29722", "18.2"),
    (8, "116.1989", "2.224115", "0.01571273", "-135.9683", "-23.67205", "17.8"),
    (9, "114.5404", "2.188538", "0.01086022", "-133.1892", "-24.05282", "17.5"),
    (10, "113.0099", "2.153948", "0.005956888", "-130.5765", "-24.43961", "17.1"),
    (11, "111.5969", "2.120286", "0.001002109", "-128.1157", "-24.83248", "16.7"),
    (12, "110.292", "2.0876", "-0.004004782", "-125.793", "-25.23152", "16.3"),
    (13, "109.0867", "2.055542", "-0.009064451", "-123.5994", "-25.63682", "15.8"),
    (14, "107.9738", "2.024367", "-0.01417756", "-121.5220", "-26.04845", "15.4"),
    (15, "106.9466", "1.993934", "-0.01934483", "-119.5525", "-26.4664", "15.0"),
    (16, "106.000", "1.964204", "-0.02456692", "-117.6823", "-26.89104", "14.5"),
    (17, "105.1262", "1.935144", "-0.02984456", "-115.9041", "-27.32218", "14.0"),
    (18, "104.3229", "1.90673", "-0.03517846", "-114.2111", "-27.76000", "13.6"),
    (19, "103.585", "1.878905", "-0.04056935", "-112.5970", "-28.20460", "13.1"),
    (20, "102.9088", "1.851668", "-0.04601797", "-111.0562", "-28.65606", "12.6"),
    (21, "102.2906", "1.824985", "-0.05152507", "-109.5836", "-29.1144", "12.1"),
    (22, "101.7273", "1.798832", "-0.05709143", "-108.1746", "-29.57998", "11.6"),
    (23, "101.217", "1.773185", "-0.06271781", "-106.8248", "-30.05263", "11.1"),
    (24, "100.7543", "1.748024", "-0.06840502", "-105.5304", "-30.53255", "10.7"),
    (25, "100.3398", "1.723329", "-0.07415386", "-104.2877", "-31.01984", "10.2"),
    (26, "99.97009", "1.699082", "-0.07996514", "-103.0934", "-31.51462", "9.7"),
    (27, "99.64358", "1.675265", "-0.08583972", "-101.9446", "-32.016", "9.2"),
    (28, "99.3585", "1.651862", "-0.09177843", "-100.8383", "-32.52708", "8.7"),
    (29, "99.11297", "1.628858", "-0.09778215", "-99.77206", "-33.04501", "8.2"),
    (30, "98.90584", "1.606239", "-0.1038517", "-98.74333", "-33.5708", "7.7"),
    (31, "98.7358", "1.583989", "-0.1099881", "-97.74996", "-34.10486", "7.2"),
    (32, "98.6015", "1.562098", "-0.1161922", "-96.78986", "-34.64704", "6.7"),
    (33, "98.50187", "1.54056", "-0.122464", "-95.86113", "-35.19758", "6.3"),
    (34, "98.43615", "1.519339", "-0.1288073", "-94.96198", "-35.75661", "5.8"),
]

TABLE_M3: List[Tuple[int, str, str, str, str, str, str]] = [
    (36, "98.43379", "1.477873", "-0.1417047", "-93.24588", "-36.90074", "4.9"),
    (37, "98.49569", "1.457599", "-0.1482617", "-92.42593", "-37.48615", "4.4"),
    (38, "98.58802", "1.437619", "-0.1548924", "-91.62957", "-38.08066", "4.0"),
    (39, "98.71033", "1.417923", "-0.1615978", "-90.85551", "-38.68445", "3.6"),
    (40, "98.86225", "1.398503", "-0.1683790", "-90.1025", "-39.29768", "3.1"),
    (41, "99.04347", "1.379352", "-0.1752370", "-89.36971", "-39.92054", "2.7"),
    (42, "99.25376", "1.36046", "-0.1821731", "-88.65582", "-40.55321", "2.3"),
    (43, "99.49293", "1.341822", "-0.1891883", "-87.95995", "-41.1958", "1.9"),
    (44, "99.76085", "1.323429", "-0.1962838", "-87.28121", "-41.84877", "1.5"),
    (45, "100.0576", "1.305276", "-0.2034610", "-86.61873", "-42.51206", "1.1"),
]

COLUMN_NAMES = ("k", "A4", "neg_ln_z1", "ln_z2", "frac_z1", "frac_z2", "M")


def printed_tolerance(text: str, floor: float = 5e-4) -> float:
    """Comparison tolerance for a printed value.

    At least ``floor``; widened to just over one unit in the last printed
    decimal place when the value is printed more coarsely (e.g. the M
    column shows one decimal), since the printing rounds with an unknown
    rule.
    """
    decimals = len(text.split(".")[1]) if "." in text else 0
    return max(floor, 1.05 * 10.0 ** (-decimals))
