#pragma once

// Chebyshev coefficient tables for the combined J0/Y0/J1/Y1 evaluator
// in hankel.cpp.  Generated offline with 60-digit arithmetic and
// verified against a high-precision reference on a dense grid.

namespace ebem::detail {

inline constexpr double kHankelSplit = 8.0;

inline constexpr double kJ0Small[18] = {
    0.1577279714748901196,
    -0.008723442352852221291,
    0.2651786132033368099,
    -0.3700949938726497790,
    0.1580671023320972613,
    -0.03489376941140888516,
    0.004819180069467604497,
    -0.0004606261662062750475,
    0.00003246032882100508081,
    -1.761946907762150749e-6,
    7.608163592418781867e-8,
    -2.679253530557672898e-9,
    7.848696314479464417e-11,
    -1.943834686737016571e-12,
    4.125320595634373933e-14,
    -7.588508125447546338e-16,
    1.221851587396141103e-17,
    -1.736789607700236768e-19,
};

inline constexpr double kJ1Small[17] = {
    0.08104484632565811510,
    -0.1489751450676521091,
    0.1609992623572097025,
    -0.08268049176681790660,
    0.02221363965496603541,
    -0.003646940600769275958,
    0.0004050337728354821833,
    -0.00003255554866857258517,
    1.985877404991516741e-6,
    -9.521984756750436182e-8,
    3.687133759097148239e-9,
    -1.178026622695884840e-10,
    3.160154580348003321e-12,
    -7.221755239651773428e-14,
    1.423214400351394232e-15,
    -2.444197291619046389e-17,
    3.691268299792933262e-19,
};

inline constexpr double kV0Small[18] = {
    -0.02150511144965755061,
    -0.2751181330435187915,
    0.1986056347025541556,
    0.2342527461090218021,
    -0.1656359817136504131,
    0.04462137954066928217,
    -0.006932286291523188294,
    0.0007191174037523030937,
    -0.00005392507972293938550,
    3.076493288108484295e-6,
    -1.384571812300865375e-7,
    5.051054369090245486e-9,
    -1.525828504279970693e-10,
    3.882867469443679396e-12,
    -8.442874824652624860e-14,
    1.587483422179426743e-15,
    -2.607610220121480825e-17,
    3.775075884599188881e-19,
};

inline constexpr double kV1Small[17] = {
    0.008519470990998858797,
    -0.02708217861810123654,
    -0.08402960828953827911,
    0.07834979718243384514,
    -0.02668866192806121520,
    0.005020737663824084290,
    -0.0006115619130333006883,
    0.00005265708941202687782,
    -3.391513736641682023e-6,
    1.700504118314677287e-7,
    -6.838423741837670582e-9,
    2.257394481404179170e-10,
    -6.231918860174520569e-12,
    1.460991856559023182e-13,
    -2.946146633840857646e-15,
    5.166288127514163974e-17,
    -7.952479917098324835e-19,
};

inline constexpr double kP0Large[16] = {
    0.9994603493475186654,
    -0.0005365220468132117425,
    3.075184787519474622e-6,
    -5.170594537606097701e-8,
    1.630646463515138309e-9,
    -7.864091377237069999e-11,
    5.168262387349192462e-12,
    -4.304578869925391222e-13,
    4.326595743154940564e-14,
    -5.069034095935236076e-15,
    6.748072215733873667e-16,
    -1.001151372346778490e-16,
    1.630591923374416133e-17,
    -2.880866169482811644e-18,
    5.468082783257503469e-19,
    -1.106203649678963437e-19,
};

inline constexpr double kQ0Large[17] = {
    -0.1244468368426960728,
    0.0005470815954089319680,
    -5.931598728848517812e-6,
    1.437796579837519343e-7,
    -5.817532749493055984e-9,
    3.376097523734990755e-10,
    -2.565397936797307796e-11,
    2.404916100281365049e-12,
    -2.669062548257941597e-13,
    3.404180032196368896e-14,
    -4.879944105312039943e-15,
    7.729703176242603796e-16,
    -1.334885217150247752e-16,
    2.486595238938952381e-17,
    -4.952892629883996971e-18,
    1.047315897371128843e-18,
    -2.336930172042445345e-19,
};

inline constexpr double kP1Large[16] = {
    1.000903040860013700,
    0.0008989898330859408556,
    -3.987284300488908523e-6,
    6.177633960644298535e-8,
    -1.871890749106306609e-9,
    8.816898659582338898e-11,
    -5.704863640395644702e-12,
    4.699195515230542375e-13,
    -4.684223783990489222e-14,
    5.452674896044717167e-15,
    -7.221180842274017880e-16,
    1.066768911433541150e-16,
    -1.731231321611631087e-17,
    3.049299119766525876e-18,
    -5.772421654985871913e-19,
    1.165057175567016655e-19,
};

inline constexpr double kQ1Large[17] = {
    0.3742222965562826019,
    -0.0007702178839325663459,
    7.310892206364363300e-6,
    -1.676782510726673797e-7,
    6.583354662120443303e-9,
    -3.749090950541556184e-10,
    2.812175035974886468e-11,
    -2.611452539462319941e-12,
    2.877421266333223354e-13,
    -3.649001916061837753e-14,
    5.206626366226707096e-15,
    -8.215318025458592651e-16,
    1.414108439021179261e-16,
    -2.626761589838427068e-17,
    5.219264919668813647e-18,
    -1.101261718781280719e-18,
    2.452593231852108677e-19,
};

}  // namespace ebem::detail
