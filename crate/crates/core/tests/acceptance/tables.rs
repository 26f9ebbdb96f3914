//! Frozen six-significant-figure reference cells for the exact LU
//! workload tables, plus the published raw timings used by the
//! derived-column checks. Cells are (i, g_hat, g_reduced, h_hat,
//! h_hat/N) with N = 2^i.

pub type LuCountRow = (u32, f64, f64, f64, f64);

pub const LU_COUNTS_Z1_100: [LuCountRow; 20] = [
    (1, 2666600.0, 1338350.0, 1.99245, 0.996227),
    (2, 21333200.0, 5363400.0, 3.97755, 0.994388),
    (3, 170666000.0, 21473300.0, 7.94784, 0.99348),
    (4, 1365330000.0, 85932300.0, 15.8885, 0.993029),
    (5, 10922700000.0, 343807000.0, 31.7697, 0.992805),
    (6, 87381300000.0, 1375380000.0, 63.5323, 0.992693),
    (7, 699051000000.0, 5501850000.0, 127.057, 0.992636),
    (8, 5592410000000.0, 22008000000.0, 254.108, 0.992608),
    (9, 44739200000000.0, 88033300000.0, 508.208, 0.992594),
    (10, 357914000000000.0, 352136000000.0, 1016.41, 0.992587),
    (11, 2863310000000000.0, 1408550000000.0, 2032.81, 0.992584),
    (12, 2.29065e+16, 5634200000000.0, 4065.62, 0.992582),
    (13, 1.83252e+17, 22536800000000.0, 8131.23, 0.992581),
    (14, 1.46602e+18, 90147300000000.0, 16262.4, 0.992581),
    (15, 1.17281e+19, 360589000000000.0, 32524.9, 0.992581),
    (16, 9.3825e+19, 1442360000000000.0, 65049.8, 0.992581),
    (17, 7.506e+20, 5769430000000000.0, 130100.0, 0.992581),
    (18, 6.0048e+21, 2.30777e+16, 260199.0, 0.99258),
    (19, 4.80384e+22, 9.23109e+16, 520398.0, 0.99258),
    (20, 3.84307e+23, 3.69243e+17, 1040800.0, 0.99258),
];

pub const LU_COUNTS_Z1_1000: [LuCountRow; 20] = [
    (1, 2666670000.0, 1333830000.0, 1.99925, 0.999625),
    (2, 21333300000.0, 5336330000.0, 3.99775, 0.999438),
    (3, 170667000000.0, 21347300000.0, 7.99475, 0.999344),
    (4, 1365330000000.0, 85393300000.0, 15.9888, 0.999297),
    (5, 10922700000000.0, 341581000000.0, 31.9768, 0.999274),
    (6, 87381300000000.0, 1366340000000.0, 63.9528, 0.999262),
    (7, 699051000000000.0, 5465400000000.0, 127.905, 0.999257),
    (8, 5592410000000000.0, 21861600000000.0, 255.809, 0.999254),
    (9, 4.47392e+16, 87446700000000.0, 511.617, 0.999252),
    (10, 3.57914e+17, 349787000000000.0, 1023.23, 0.999252),
    (11, 2.86331e+18, 1399150000000000.0, 2046.47, 0.999251),
    (12, 2.29065e+19, 5596600000000000.0, 4092.93, 0.999251),
    (13, 1.83252e+20, 2.23864e+16, 8185.86, 0.999251),
    (14, 1.46602e+21, 8.95456e+16, 16371.7, 0.999251),
    (15, 1.17281e+22, 3.58182e+17, 32743.5, 0.999251),
    (16, 9.3825e+22, 1.43273e+18, 65486.9, 0.999251),
    (17, 7.506e+23, 5.73092e+18, 130974.0, 0.999251),
    (18, 6.0048e+24, 2.29237e+19, 261948.0, 0.999251),
    (19, 4.80384e+25, 9.16947e+19, 523895.0, 0.999251),
    (20, 3.84307e+26, 3.66779e+20, 1047790.0, 0.999251),
];

pub const LU_COUNTS_Z1_10000: [LuCountRow; 20] = [
    (1, 2666670000000.0, 1333380000000.0, 1.99992, 0.999962),
    (2, 21333300000000.0, 5333630000000.0, 3.99978, 0.999944),
    (3, 170667000000000.0, 21334700000000.0, 7.99948, 0.999934),
    (4, 1365330000000000.0, 85339300000000.0, 15.9989, 0.99993),
    (5, 1.09227e+16, 341358000000000.0, 31.9977, 0.999927),
    (6, 8.73813e+16, 1365430000000000.0, 63.9953, 0.999926),
    (7, 6.99051e+17, 5461740000000000.0, 127.99, 0.999926),
    (8, 5.59241e+18, 2.1847e+16, 255.981, 0.999925),
    (9, 4.47392e+19, 8.73879e+16, 511.962, 0.999925),
    (10, 3.57914e+20, 3.49552e+17, 1023.92, 0.999925),
    (11, 2.86331e+21, 1.39821e+18, 2047.85, 0.999925),
    (12, 2.29065e+22, 5.59282e+18, 4095.69, 0.999925),
    (13, 1.83252e+23, 2.23713e+19, 8191.39, 0.999925),
    (14, 1.46602e+24, 8.94852e+19, 16382.8, 0.999925),
    (15, 1.17281e+25, 3.57941e+20, 32765.5, 0.999925),
    (16, 9.3825e+25, 1.43176e+21, 65531.1, 0.999925),
    (17, 7.506e+26, 5.72705e+21, 131062.0, 0.999925),
    (18, 6.0048e+27, 2.29082e+22, 262124.0, 0.999925),
    (19, 4.80384e+28, 9.16328e+22, 524249.0, 0.999925),
    (20, 3.84307e+29, 3.66531e+23, 1048500.0, 0.999925),
];

pub const LU_COUNTS_Z1_100000: [LuCountRow; 20] = [
    (1, 2666670000000000.0, 1333340000000000.0, 1.99999, 0.999996),
    (2, 2.13333e+16, 5333360000000000.0, 3.99998, 0.999994),
    (3, 1.70667e+17, 2.13335e+16, 7.99995, 0.999993),
    (4, 1.36533e+18, 8.53339e+16, 15.9999, 0.999993),
    (5, 1.09227e+19, 3.41336e+17, 31.9998, 0.999993),
    (6, 8.73813e+19, 1.36534e+18, 63.9995, 0.999993),
    (7, 6.99051e+20, 5.46137e+18, 127.999, 0.999993),
    (8, 5.59241e+21, 2.18455e+19, 255.998, 0.999993),
    (9, 4.47392e+22, 8.7382e+19, 511.996, 0.999993),
    (10, 3.57914e+23, 3.49528e+20, 1023.99, 0.999993),
    (11, 2.86331e+24, 1.39811e+21, 2047.98, 0.999993),
    (12, 2.29065e+25, 5.59245e+21, 4095.97, 0.999993),
    (13, 1.83252e+26, 2.23698e+22, 8191.94, 0.999993),
    (14, 1.46602e+27, 8.94792e+22, 16383.9, 0.999993),
    (15, 1.17281e+28, 3.57917e+23, 32767.8, 0.999993),
    (16, 9.3825e+28, 1.43167e+24, 65535.5, 0.999993),
    (17, 7.506e+29, 5.72667e+24, 131071.0, 0.999993),
    (18, 6.0048e+30, 2.29067e+25, 262142.0, 0.999992),
    (19, 4.80384e+31, 9.16267e+25, 524284.0, 0.999993),
    (20, 3.84307e+32, 3.66507e+26, 1048570.0, 0.999993),
];

/// (N, theoretical S, theoretical E) for the fixed-workload run at
/// s = 0.023595.
pub const MATMUL_THEORETICAL: [(u64, f64, f64); 7] = [
    (2, 1.953898, 0.976949),
    (4, 3.735577, 0.933894),
    (8, 6.865980, 0.858248),
    (16, 11.817493, 0.738593),
    (32, 18.481672, 0.577552),
    (64, 25.739145, 0.402174),
    (128, 32.027504, 0.250215),
];

/// (N, theoretical S, theoretical E) for the variable-workload run at
/// s = 0.01, z1 = 100.
pub const LU_THEORETICAL: [(u64, f64, f64); 7] = [
    (2, 1.997481, 0.998741),
    (4, 3.998107, 0.999527),
    (8, 7.998896, 0.999862),
    (16, 15.999408, 0.999963),
    (32, 31.999695, 0.999990),
    (64, 63.999844, 0.999998),
    (128, 127.999924, 0.999999),
];

/// Published raw times (ms) of the fixed-workload run: T(1) then T(N)
/// for N = 2..128, with the printed derived S/E columns.
pub const MATMUL_RAW_T1: f64 = 1529020.0;
pub const MATMUL_RAW: [(u64, f64, f64, f64); 7] = [
    (2, 953760.0, 1.603150, 0.801575),
    (4, 493262.0, 3.099813, 0.774953),
    (8, 270447.0, 5.653677, 0.706710),
    (16, 163341.0, 9.360908, 0.585057),
    (32, 100269.0, 15.249180, 0.476537),
    (64, 74392.0, 20.553555, 0.321149),
    (128, 64154.0, 23.833588, 0.186200),
];

/// Published raw times (ms) of the variable-workload run: per N the
/// single-worker and N-worker times with the printed derived columns.
pub const LU_RAW: [(u64, f64, f64, f64, f64); 7] = [
    (2, 21.0, 10.0, 2.100000, 1.050000),
    (4, 167.0, 35.0, 4.771429, 1.192857),
    (8, 1053.0, 111.0, 9.486486, 1.185811),
    (16, 10255.0, 593.0, 17.293423, 1.080839),
    (32, 94539.0, 2989.0, 31.628973, 0.988405),
    (64, 831699.0, 18074.0, 46.016323, 0.719005),
    (128, 5383229.0, 202302.0, 26.609865, 0.207890),
];
