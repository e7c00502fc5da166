#pragma once
// High-precision reference values for kernel, series, and quadrature tests.
// Generated offline with 50+ digit arithmetic; entries are correctly rounded
// to double precision. Material: lambda = mu = rho = 1, omega = 2.

namespace ebem::testref {

inline constexpr double kLambda = 1.0;
inline constexpr double kMu = 1.0;
inline constexpr double kRho = 1.0;
inline constexpr double kOmega = 2.0;

// H^(1)_0(x), H^(1)_1(x): { x, re h0, im h0, re h1, im h1 }
struct HankelRef { double x, h0r, h0i, h1r, h1i; };
inline constexpr HankelRef kHankel[] = {
    { 1e-08, 1.0, -11.80077387717953, 5e-09, -63661977.236758195 },
    { 1e-06, 0.99999999999975, -8.869031481659444, 4.999999999999375e-07, -636619.772372175 },
    { 0.0001, 0.9999999975, -5.937289069709337, 4.99999999375e-05, -6366.198036455761 },
    { 0.01, 0.9999750001562495, -3.005455637083646, 0.004999937500260416, -63.67859628206065 },
    { 0.1, 0.99750156206604, -1.5342386513503667, 0.049937526036242, -6.4589510947020266 },
    { 0.25, 0.9844359292958527, -0.9315730249300587, 0.12402597732272692, -2.7041052293152825 },
    { 0.5, 0.9384698072408129, -0.44451873350670656, 0.2422684576748739, -1.471472392670243 },
    { 1.0, 0.7651976865579666, 0.08825696421567696, 0.4400505857449335, -0.7812128213002887 },
    { 2.0, 0.22389077914123567, 0.5103756726497451, 0.5767248077568734, -0.10703243154093754 },
    { 5.0, -0.1775967713143383, -0.30851762524903376, -0.32757913759146523, 0.14786314339122683 },
    { 10.0, -0.24593576445134835, 0.055671167283599395, 0.04347274616886144, 0.24901542420695388 },
    { 40.0, 0.00736689058423729, 0.12593641705826092, 0.126038318037585, -0.005793505821549633 },
    { 100.0, 0.019985850304223122, -0.07724431336508315, -0.07714535201411216, -0.020372312002759792 },
    { 316.23, 0.012651833142111704, 0.04304744898458888, 0.0430675069056249, -0.01258378561429083 },
    { 1000.0, 0.024786686152420176, 0.0047159179776228135, 0.004728311907089524, -0.024784331292351778 },
};

// Full dynamic kernels at sample (z, m, n); complex 2x2 row-major {re, im}.
// Static counterparts are real 2x2 row-major.
struct KernelRef {
    double z1, z2, m1, m2, n1, n2;
    double G[8], D[8], N[8];
    double G0[4], D0[4], N0[4];
};
inline constexpr KernelRef kKernels[] = {
    { 0.7, -0.4, 0.6, 0.8, -0.28, 0.96,
      { -0.039756746407234325, 0.10352703903089275, -0.024899081762433346, -0.024391300172780402, -0.024899081762433346, -0.024391300172780402, -0.0691020927701022, 0.07478014954154442 },
      { -0.22520586799438236, -0.15374110080750675, 0.07460284715192746, -0.04149588061268926, 0.136184606060131, 0.1289851694790936, -0.0721438817469355, -0.13824969622836134 },
      { 0.007477170487815574, 0.11113544866781672, -0.03729431182645573, -0.007140124034515617, -0.3684746811623247, 0.13955450527216015, 0.36508678768756125, 0.4576206480204654 },
      { 0.08937234791901058, -0.022853017469605483, -0.022853017469605483, 0.06243843447268983 },
      { -0.1900818562938944, 0.03586165818307322, 0.12727372806149514, -0.09394850368548804 },
      { 0.10717543611273983, -0.15423372060636534, -0.15423372060636534, 0.401115853540903 } },
    { 0.01, -0.0065, 0.47058823529411764, 0.8823529411764706, 0.6896551724137931, -0.7241379310344828,
      { 0.4339701806928754, 0.16665011854650852, -0.024262367202645414, -7.221851237475651e-06, -0.024262367202645414, -7.221851237475651e-06, 0.4124140006012943, 0.16664370220944752 },
      { 16.50777600747354, 0.003989272748175472, -6.881482411515638, -3.840009810592166e-05, -8.94246135609409, -0.0012643592702625637, 9.47912611529343, 0.0037459009485120835 },
      { 1231.8658186768448, -0.030409712451004507, 371.0464946406272, 0.37586533352175827, 369.60568057596197, -0.25687467921613233, -1670.1258327139087, -0.4586080175957806 },
      { 0.5337479686286325, -0.024241526188572223, -0.024241526188572223, 0.5122103049764779 },
      { 16.496087749426774, -6.880785996978204, -8.938422172135528, 9.46870873583971 },
      { 1231.8376322882616, 370.14184344909233, 370.14184344909233, -1668.8167610814937 } },
    { -1.9, 1.3, 0.38461538461538464, 0.9230769230769231, -0.6, 0.8,
      { -0.011706771373995832, -0.04076801391348679, 0.05202039083457202, -0.003260160991166963, 0.05202039083457202, -0.003260160991166963, 0.028730131622918455, -0.043302228125244105 },
      { -0.11940756284208552, 0.06231681837017533, 0.03162366160590792, -0.14211567119345422, 0.06887466254222353, -0.08666966186926865, -0.06747762748988148, -0.06014286734855663 },
      { 0.010966455748707422, -0.22623320054485702, -0.1470461796708896, 0.08229508834332916, 0.1813726127752296, -0.1363291638369579, -0.012595550782068704, 0.0667126532804786 },
      { -0.025813591954725327, -0.024724069775910785, -0.024724069775910785, -0.045032302063935326 },
      { 0.08127384000311084, -0.03327088097168702, -0.0480853033475364, 0.049653622615882305 },
      { -0.03776887660476351, 8.692637090591192e-06, 8.692637090591192e-06, 0.047513050864295234 } },
};

// Radial kernel scalars at radius r. Order:
//   gpsi, gchi, d1, d2, d3, n1, n2, n4, n5, n7
// full[]: dynamic values; rem[]: dynamic minus static (complex {re,im} x10);
// stat[]: static values (real).
struct ScalarRef { double r; double full[20], rem[20], stat[10]; };
inline constexpr ScalarRef kScalars[] = {
    { 1e-08,
      { 1.8812954203206411, 0.16666666666666666, 0.05305164769729857, 1.1111111111111111e-17, 5305164.769729864, 1.6666666666666665e-09, -5305164.769729877, -2.7777777777777776e-09, -21220659.07891938, -1.6049382716049382e-25, 1061032953945975.4, 0.5555555555555555, 1061032953945968.9, -1.7901234567901234e-17, -1.6976527263135504e+16, -1.6460905350000917e-33, -1.2676439097364645, -0.1111111111111111, 2122065907891938.0, 2.839506172839506e-17 },
      { -0.09972533387314884, 0.16666666666666666, 1.3103616791199062e-16, 1.1111111111111111e-17, 1.9525282629273636e-08, 1.6666666666666665e-09, -3.2181829232891965e-08, -2.7777777777777776e-09, -1.4147106052612938e-09, -1.6049382716049382e-25, 6.4363658465783935, 0.5555555555555555, -0.0353677651315325, -1.7901234567901234e-17, -0.5658842421045168, -1.6460905350000917e-33, -1.2676439097364645, -0.1111111111111111, 0.21220659078919413, 2.839506172839506e-17 },
      { 1.9810207541937899, 0.05305164769729845, 5305164.769729844, -5305164.769729844, -21220659.078919377, 1061032953945968.9, 1061032953945968.9, -1.6976527263135502e+16, 0.0, 2122065907891937.8 } },
    { 1e-06,
      { 1.3926716877326, 0.16666666666647223, 0.05305164769828306, 1.1111111111107099e-13, 53051.64769876235, 1.6666666666659568e-07, -53051.647699702255, -2.7777777777760804e-07, -212206.59078933526, -1.6049382716045267e-19, 106103295399.40451, 0.5555555555552161, 106103295394.56152, -1.79012345678928e-13, -1697652726314.1162, -1.6460905349790918e-25, -0.9418947546781492, -0.11111111111102469, 212206590789.40598, 2.839506172838724e-13 },
      { -0.09972533387490472, 0.16666666666647223, 9.846125240620091e-13, 1.1111111111107099e-13, 1.4639045303404196e-06, 1.6666666666659568e-07, -2.40381003564383e-06, -2.7777777777760804e-07, -1.414710605275733e-07, -1.6049382716045267e-19, 4.807620071287659, 0.5555555555552161, -0.0353677651330967, -1.79012345678928e-13, -0.5658842421047211, -1.6460905349790918e-25, -0.9418947546781492, -0.11111111111102469, 0.2122065907917392, 2.839506172838724e-13 },
      { 1.4923970216075046, 0.05305164769729845, 53051.647697298446, -53051.647697298446, -212206.59078919378, 106103295394.5969, 106103295394.5969, -1697652726313.5503, 0.0, 212206590789.1938 } },
    { 0.0001,
      { 0.9040479432876325, 0.16666666472222222, 0.05305165428593211, 1.1111111070987654e-09, 530.5165745010638, 1.666666659567901e-05, -530.5166359166982, -2.7777777608024692e-05, -2122.065922039045, -1.6049382674897119e-13, 10610332.718333963, 0.5555555521604938, 10610329.504091913, -1.7901234483539094e-09, -169765273.19723928, -1.646090531659808e-17, -0.6161455942354533, -0.11111111024691359, 21220659.291125987, 2.839506165020576e-09 },
      { -0.09972534573358706, 0.16666666472222222, 6.58863366443199e-09, 1.1111111070987654e-09, 9.752807932464255e-05, 1.666666659567901e-05, -0.00015894371373954187, -2.7777777608024692e-05, -1.4147107026190306e-05, -1.6049382674897119e-13, 3.1788742747908376, 0.5555555521604938, -0.035367775527398025, -1.7901234483539094e-09, -0.5658842441479878, -1.646090531659808e-17, -0.6161455942354533, -0.11111111024691359, 0.21220660791882232, 2.839506165020576e-09 },
      { 1.0037732890212197, 0.05305164769729845, 530.5164769729845, -530.5164769729845, -2122.065907891938, 10610329.539459689, 10610329.539459689, -169765272.63135502, 0.0, 21220659.078919377 } },
    { 0.01,
      { 0.41536262611635244, 0.1666472227469075, 0.0530849577333682, 1.1110709881687208e-05, 5.310031097665862, 0.0016665956799897053, -5.312914849400971, -0.0027776080278291903, -21.222074292560897, -1.6048971197565134e-07, 1062.5829698801942, 0.5555216055658381, 1060.99753470685, -1.7900390959036258e-05, -16977.09316781762, -1.6460573390976973e-09, -0.2903679215258174, -0.11110246929012224, 2122.278202529249, 2.839427984351847e-05 },
      { -0.09978693031858193, 0.1666472227469075, 3.331003606975857e-05, 1.1110709881687208e-05, 0.0048663279360166975, 0.0016665956799897053, -0.007750079671126589, -0.0027776080278291903, -0.0014152136415202798, -1.6048971197565134e-07, 1.550015934225318, 0.5555216055658381, -0.03541923911886923, -1.7900390959036258e-05, -0.5659046821185715, -1.6460573390976973e-09, -0.2903679215258174, -0.11110246929012224, 0.21229463731108772, 2.839427984351847e-05 },
      { 0.5151495564349344, 0.05305164769729845, 5.305164769729845, -5.305164769729845, -21.22065907891938, 1061.032953945969, 1061.032953945969, -16976.527263135504, 0.0, 2122.065907891938 } },
    { 0.05,
      { 0.24361648069340222, 0.16618088339255857, 0.05359921343738181, 0.00027752708653484777, 1.0768062338545472, 0.008324462930283674, -1.0855070098557411, -0.013867679556727089, -4.2512476625605125, -2.0048871554118164e-05, 43.42028039422965, 0.5547071822690836, 42.40512325973033, -0.0004470037966351923, -679.6274878956832, -1.0282880027210477e-06, -0.17606052590408403, -0.11089515816008158, 85.09631557646007, 0.000709387987057708 },
      { -0.10076640949927346, 0.16618088339255857, 0.0005475657400833626, 0.00027752708653484777, 0.01577327990857821, 0.008324462930283674, -0.024474055909772273, -0.013867679556727089, -0.0071158467766370475, -2.0048871554118164e-05, 0.978962236390891, 0.5547071822690836, -0.036194898108422385, -0.0004470037966351923, -0.5663973702631103, -1.0282880027210477e-06, -0.17606052590408403, -0.11089515816008158, 0.21367926078256386, 0.000709387987057708 },
      { 0.34438289019267565, 0.05305164769729845, 1.0610329539459689, -1.0610329539459689, -4.244131815783875, 42.44131815783876, 42.44131815783876, -679.0610905254201, 0.0, 84.88263631567752 } },
    { 0.124,
      { 0.14363254574583514, 0.163689271608065, 0.0554177819256161, 0.0016989770819305532, 0.45481125163570146, 0.020531606123270763, -0.4681830250550407, -0.034121707786313085, -1.7293522160131025, -0.00030479682151316514, 7.551339113790979, 0.550350125585695, 6.861743025593677, -0.0027325943270570825, -110.97834549008213, -3.879657868940609e-05, -0.11005725343104693, -0.10978596506391128, 14.019868661407656, 0.0043475685892238785 },
      { -0.10438111814172063, 0.163689271608065, 0.0023661342283176506, 0.0016989770819305532, 0.026975383109101116, 0.020531606123270763, -0.04034715652844035, -0.034121707786313085, -0.018008741906700973, -0.00030479682151316514, 0.6507605891683927, 0.550350125585695, -0.03883549902890922, -0.0027325943270570825, -0.5690890961207504, -3.879657868940609e-05, -0.11005725343104693, -0.10978596506391128, 0.21871161216248286, 0.0043475685892238785 },
      { 0.24801366388755577, 0.05305164769729845, 0.4278358685266004, -0.4278358685266004, -1.7113434741064015, 6.900578524622587, 6.900578524622587, -110.40925639396139, 0.0, 13.801157049245173 } },
    { 0.126,
      { 0.14181555676955115, 0.16359286704189918, 0.05547627232204464, 0.0017539075499160882, 0.44823474426398763, 0.020858308050418897, -0.4616714731126285, -0.03466142511983443, -1.7024905698210309, -0.0003197431779751441, 7.328118620835373, 0.550181351108483, 6.644332820309419, -0.0028207868412067835, -107.50121352987108, -4.135662152278014e-05, -0.1088665239728896, -0.10974299588592432, 13.58537855254142, 0.004488325085401047 },
      { -0.1045004181737088, 0.16359286704189918, 0.0024246246247461977, 0.0017539075499160882, 0.027189921269555505, 0.020858308050418897, -0.04062665011819639, -0.03466142511983443, -0.018311277843302425, -0.0003197431779751441, 0.6448674621935935, 0.550181351108483, -0.03891833833236075, -0.0028207868412067835, -0.5691949916026107, -4.135662152278014e-05, -0.1088665239728896, -0.10974299588592432, 0.21887623525785962, 0.004488325085401047 },
      { 0.24631597494325994, 0.05305164769729845, 0.4210448229944321, -0.4210448229944321, -1.6841792919777283, 6.683251158641779, 6.683251158641779, -106.93201853826847, 0.0, 13.366502317283558 } },
    { 0.5,
      { -0.029384899044448992, 0.12124127665991635, 0.06483285164477047, 0.025349100496405146, 0.13400970835605358, 0.07476006768118186, -0.1312750040710625, -0.11862889088684617, -0.5067562014620953, -0.018807690806426285, 0.52510001628425, 0.47451556354738467, 0.37634219903212707, -0.03967272170619533, -7.414553341474835, -0.009780083555002157, 0.002751018947621059, -0.09045195727131089, 1.0994573390235998, 0.06622604126151856 },
      { -0.1294559229439821, 0.12124127665991635, 0.011781203947472025, 0.025349100496405146, 0.027906412961456704, 0.07476006768118186, -0.02517170867646559, -0.11862889088684617, -0.0823430198837078, -0.018807690806426285, 0.10068683470586236, 0.47451556354738467, -0.0480709825462605, -0.03967272170619533, -0.6239424362206335, -0.009780083555002157, 0.002751018947621059, -0.09045195727131089, 0.25063097586682465, 0.06622604126151856 },
      { 0.10007102389953308, 0.05305164769729845, 0.1061032953945969, -0.1061032953945969, -0.4244131815783876, 0.4244131815783876, 0.4244131815783876, -6.790610905254201, 0.0, 0.8488263631567752 } },
    { 1.0,
      { -0.09367490740359936, 0.01897957841513494, 0.04315803647736365, 0.07579993696997096, 0.023251986686121825, 0.10480322780736168, 0.03279985718425853, -0.13676252993849475, -0.3643600328151826, -0.12326798026805487, -0.06559971436851705, 0.2735250598769895, 0.11131196143968253, -0.10629806807952796, -2.495722588061098, -0.13405868973511276, 0.0574937189417689, -0.03896463132965357, 0.4322027601095465, 0.21344644004560717 },
      { -0.12020073125224859, 0.01897957841513494, -0.009893611219934796, 0.07579993696997096, -0.02979966101117662, 0.10480322780736168, 0.08585150488155698, -0.13676252993849475, -0.15215344202598882, -0.12326798026805487, -0.17170300976311395, 0.2735250598769895, 0.0052086660450856425, -0.10629806807952796, -0.7980698617475477, -0.13405868973511276, 0.0574937189417689, -0.03896463132965357, 0.2199961693203527, 0.21344644004560717 },
      { 0.026525823848649224, 0.05305164769729845, 0.05305164769729845, -0.05305164769729845, -0.2122065907891938, 0.1061032953945969, 0.1061032953945969, -1.6976527263135504, 0.0, 0.2122065907891938 } },
    { 2.3,
      { 0.06413167488637271, -0.045818950070827216, -0.11158088297797078, 0.007383388923151438, -0.07675382054537597, -0.037348401612685926, 0.03984576597201867, 0.134696756242767, 0.15490824601902214, -0.3697716684870848, -0.034648492149581454, -0.11712761412414523, 0.20777680013316818, 0.1369474760656911, -0.7001601008201706, -1.3976171328954259, -0.003129634550386516, 0.05690990194591255, -0.20393209539422216, 0.21816754826990364 },
      { 0.12598025374536145, -0.045818950070827216, -0.16463253067526923, 0.007383388923151438, -0.09981975432681008, -0.037348401612685926, 0.06291169975345277, 0.134696756242767, 0.24717198114475855, -0.3697716684870848, -0.054705825872567636, -0.11712761412414523, 0.187719466410182, 0.1369474760656911, -0.37924276125239165, -1.3976171328954259, -0.003129634550386516, 0.05690990194591255, -0.24404676284019453, 0.21816754826990364 },
      { -0.061848578858988736, 0.05305164769729845, 0.023065933781434105, -0.023065933781434105, -0.09226373512573642, 0.020057333722986178, 0.020057333722986178, -0.32091733956777885, 0.0, 0.040114667445972356 } },
};

// Plane pressure wave, amplitude 1: u_j = d_j exp(-i kL d.x);
// traction on a surface with normal n: t = -i kL exp(-i kL d.x) (lambda n + 2 mu (n.d) d).
struct IncidentRef { double x1, x2, d1, d2, n1, n2; double u[4], t[4]; };
inline constexpr IncidentRef kIncident[] = {
    { 0.31, -1.2, 0.8253356149096783, 0.5646424733950354, -0.5885011172553457, 0.8084964038195902,
      { 0.7293994256173517, 0.3862063634217, 0.4990089950481186, 0.2642179888325735 },
      { -0.3440273804309895, 0.6497390966316391, 0.41903686363611414, -0.7914039658506173 } },
    { -0.05, 0.4, 1.0, 0.0, 1.0, 0.0,
      { 0.9983337962448591, 0.05770295724941917, 0.0, 0.0 },
      { 0.19988890740593776, -3.4583297160184223, 0.0, 0.0 } },
    { 1.05, 0.2, -0.7259323042001401, -0.6877661591839738, 0.6967067093471654, -0.7173560908995228,
      { -0.36812068119341207, -0.6256715387158209, -0.3487666075138308, -0.5927766385426881 },
      { 0.7112780377135498, -0.4184881995726371, -0.6969684603586983, 0.4100690034968981 } },
};

// I_ab = int_0^1 int_0^1 P_a(s) P_b(t) ln|s-t| ds dt, P_0 = 1-s, P_1 = s.
// (I_00 + I_01 + I_10 + I_11 = -3/2 exactly.)
inline constexpr double kLogGal[2][2] = {
    { -0.4375, -0.3125 },
    { -0.3125, -0.4375 },
};

}  // namespace ebem::testref
