#pragma once

// CIE 1931 2-degree standard observer at 1 nm, 360-830 nm. Generated from
// data/cie1931_2deg_1nm.txt; keep the two in sync.

#include <array>

namespace hsi::cie1931 {

inline constexpr int kFirstNm = 360;
inline constexpr int kLastNm = 830;

// {xbar, ybar, zbar} per nm.
inline constexpr std::array<std::array<double, 3>, 471> kTable = {{
    {0.0001299, 3.917e-06, 0.0006061},
    {0.0001475573, 4.445439e-06, 0.0006889616},
    {0.0001657757, 4.992276e-06, 0.0007744576},
    {0.0001851903, 5.577578e-06, 0.000865572},
    {0.0002070029, 6.227845e-06, 0.0009680185},
    {0.0002321, 6.965e-06, 0.001086},
    {0.0002606334, 7.802064e-06, 0.001220188},
    {0.0002930796, 8.756368e-06, 0.001372814},
    {0.0003295757, 9.835866e-06, 0.001544516},
    {0.000370075, 1.104378e-05, 0.001735067},
    {0.0004149, 1.239e-05, 0.001946},
    {0.0004645842, 1.389186e-05, 0.002179825},
    {0.000519208, 1.556044e-05, 0.002436875},
    {0.0005813406, 1.743702e-05, 0.002729476},
    {0.0006546797, 1.957707e-05, 0.003075389},
    {0.0007416, 2.202e-05, 0.003486},
    {0.0008435541, 2.481058e-05, 0.00396817},
    {0.0009640134, 2.803532e-05, 0.004538404},
    {0.001097242, 3.158458e-05, 0.005169247},
    {0.001233421, 3.526545e-05, 0.00581372},
    {0.001368, 3.9e-05, 0.006450001},
    {0.001504767, 4.288784e-05, 0.00709613},
    {0.001644622, 4.696814e-05, 0.007756408},
    {0.001800854, 5.155845e-05, 0.008493934},
    {0.00199338, 5.712491e-05, 0.00940327},
    {0.002236, 6.4e-05, 0.01054999},
    {0.002532329, 7.228346e-05, 0.01195132},
    {0.002891076, 8.218109e-05, 0.01364866},
    {0.00330465, 9.358256e-05, 0.01560619},
    {0.003757311, 0.000106216, 0.01774949},
    {0.004243, 0.00012, 0.02005001},
    {0.004768864, 0.000135112, 0.02254199},
    {0.005333869, 0.0001515664, 0.02522103},
    {0.005971786, 0.0001700688, 0.02824711},
    {0.006733262, 0.0001916592, 0.03185999},
    {0.00765, 0.000217, 0.03621},
    {0.00873428, 0.0002464864, 0.04135654},
    {0.01002195, 0.0002811008, 0.04747111},
    {0.01144631, 0.0003191872, 0.05423727},
    {0.01289396, 0.0003579216, 0.06111687},
    {0.01431, 0.000396, 0.06785001},
    {0.01573362, 0.0004345072, 0.07462511},
    {0.01717204, 0.0004736912, 0.08147895},
    {0.01876476, 0.0005174272, 0.08907615},
    {0.02072244, 0.0005715232, 0.09841943},
    {0.02319, 0.00064, 0.1102},
    {0.02618582, 0.00072376, 0.1245104},
    {0.02976602, 0.0008250512, 0.1416242},
    {0.03389645, 0.0009420624, 0.1613799},
    {0.03848936, 0.001070882, 0.1833592},
    {0.04351, 0.00121, 0.2074},
    {0.04901774, 0.001362701, 0.2337974},
    {0.05503813, 0.001531654, 0.2626878},
    {0.06170003, 0.0017208, 0.2946907},
    {0.06918842, 0.001935306, 0.33069},
    {0.07763, 0.00218, 0.3713},
    {0.08697973, 0.002456368, 0.416321},
    {0.09715795, 0.002764432, 0.4653803},
    {0.1083201, 0.003115136, 0.5192753},
    {0.120699, 0.00352384, 0.5791946},
    {0.13438, 0.004, 0.6456},
    {0.1492586, 0.004543424, 0.7180002},
    {0.1653095, 0.005156656, 0.7962938},
    {0.182035, 0.005830288, 0.878095},
    {0.1986954, 0.00654824, 0.9598469},
    {0.21477, 0.0073, 1.03905},
    {0.2302191, 0.00808736, 1.115527},
    {0.2449316, 0.008909728, 1.188746},
    {0.2588084, 0.009767776, 1.258263},
    {0.2718125, 0.01066406, 1.323943},
    {0.2839, 0.0116, 1.3856},
    {0.294966, 0.01257354, 1.442729},
    {0.3049276, 0.01358282, 1.494943},
    {0.3137996, 0.01462906, 1.542259},
    {0.3216425, 0.0157145, 1.58488},
    {0.3285, 0.01684, 1.62296},
    {0.3343584, 0.0180057, 1.656447},
    {0.3392224, 0.01921386, 1.685365},
    {0.3431298, 0.02045642, 1.709917},
    {0.3461317, 0.02172074, 1.730389},
    {0.34828, 0.023, 1.74706},
    {0.34961, 0.02429722, 1.760098},
    {0.3501559, 0.02561274, 1.769666},
    {0.3500073, 0.0269577, 1.77623},
    {0.3492782, 0.02834938, 1.780384},
    {0.34806, 0.0298, 1.7826},
    {0.3463798, 0.03131027, 1.783},
    {0.3442567, 0.03288282, 1.781666},
    {0.341783, 0.03452064, 1.779059},
    {0.3390737, 0.03622566, 1.775759},
    {0.3362, 0.038, 1.77211},
    {0.3331712, 0.03984656, 1.768125},
    {0.3300153, 0.04176752, 1.7639},
    {0.3266437, 0.04376528, 1.758968},
    {0.3229055, 0.04584224, 1.75255},
    {0.3187, 0.048, 1.7441},
    {0.3140353, 0.05024157, 1.733596},
    {0.3088921, 0.05257232, 1.720882},
    {0.3032836, 0.05498387, 1.705904},
    {0.2972482, 0.05746198, 1.688697},
    {0.2908, 0.06, 1.6692},
    {0.2839397, 0.06260483, 1.647363},
    {0.2767146, 0.06528083, 1.623379},
    {0.2689724, 0.06804227, 1.596328},
    {0.2604743, 0.07090979, 1.564814},
    {0.2511, 0.0739, 1.5281},
    {0.2409112, 0.07701734, 1.48646},
    {0.2299058, 0.08026659, 1.439827},
    {0.2183731, 0.08366416, 1.389707},
    {0.2067569, 0.08723037, 1.338447},
    {0.19536, 0.09098, 1.28764},
    {0.1841858, 0.09491648, 1.237276},
    {0.1732932, 0.0990432, 1.187651},
    {0.1626825, 0.1033645, 1.138745},
    {0.1522934, 0.1078832, 1.090211},
    {0.1421, 0.1126, 1.0419},
    {0.1321725, 0.1175236, 0.9941854},
    {0.1225639, 0.1226715, 0.9473313},
    {0.1132777, 0.128006, 0.9014487},
    {0.1043026, 0.1334659, 0.8566225},
    {0.09564, 0.13902, 0.8129501},
    {0.08730821, 0.1446894, 0.7705349},
    {0.07931047, 0.1504825, 0.7294404},
    {0.07170313, 0.1564591, 0.6898654},
    {0.06456691, 0.1627093, 0.652064},
    {0.05795001, 0.1693, 0.6162},
    {0.05184697, 0.1762422, 0.5822878},
    {0.04626689, 0.1835553, 0.5503679},
    {0.04115568, 0.19127, 0.5203328},
    {0.0364236, 0.1994161, 0.4919845},
    {0.03201, 0.20802, 0.46518},
    {0.0279205, 0.2171124, 0.4399208},
    {0.0241492, 0.226731, 0.4161788},
    {0.02068918, 0.236867, 0.3938812},
    {0.01754021, 0.2474915, 0.3729472},
    {0.0147, 0.2586, 0.3533},
    {0.01216126, 0.2702092, 0.3348644},
    {0.009922144, 0.2823038, 0.3175511},
    {0.007972784, 0.2950155, 0.3013207},
    {0.006300304, 0.3085425, 0.2861541},
    {0.0049, 0.323, 0.272},
    {0.003780608, 0.3383639, 0.2587829},
    {0.002950864, 0.3546508, 0.2464669},
    {0.00242824, 0.3717144, 0.234815},
    {0.002236816, 0.3893172, 0.2234992},
    {0.0024, 0.4073, 0.2123},
    {0.002930672, 0.4256557, 0.2012039},
    {0.00383992, 0.4443254, 0.1901628},
    {0.005169968, 0.463368, 0.1792337},
    {0.006976256, 0.482909, 0.168549},
    {0.0093, 0.503, 0.1582},
    {0.01214909, 0.5235483, 0.1481521},
    {0.01553101, 0.5444856, 0.1383841},
    {0.01946869, 0.5656845, 0.1289797},
    {0.02398709, 0.5869722, 0.1200585},
    {0.0291, 0.6082, 0.1117},
    {0.03480741, 0.62932, 0.1038983},
    {0.04111133, 0.6503013, 0.09665295},
    {0.04798413, 0.6709218, 0.08996846},
    {0.05538173, 0.6908862, 0.08383908},
    {0.06327, 0.71, 0.07824999},
    {0.07163701, 0.7282327, 0.07319268},
    {0.08046133, 0.7455102, 0.0686639},
    {0.08973365, 0.7619556, 0.064576},
    {0.09945125, 0.7778038, 0.06080194},
    {0.1096, 0.7932, 0.05725001},
    {0.1201562, 0.8080941, 0.05390825},
    {0.1311082, 0.8224824, 0.05075481},
    {0.1423805, 0.8363159, 0.04776033},
    {0.1538682, 0.8495058, 0.04490168},
    {0.1655, 0.862, 0.04216},
    {0.1772682, 0.8738204, 0.03951416},
    {0.1891526, 0.8849716, 0.0369432},
    {0.2011698, 0.8954903, 0.034458},
    {0.2133605, 0.9054363, 0.03208504},
    {0.2257499, 0.9148501, 0.02984},
    {0.2383217, 0.9237315, 0.02771176},
    {0.2510672, 0.9320891, 0.02569408},
    {0.2639911, 0.9399235, 0.02378656},
    {0.2771005, 0.9472275, 0.02198888},
    {0.2904, 0.954, 0.0203},
    {0.3038896, 0.9602554, 0.01871774},
    {0.3175715, 0.9660066, 0.01723976},
    {0.3314399, 0.9712602, 0.01586314},
    {0.3454846, 0.9760218, 0.01458443},
    {0.3597, 0.9803, 0.0134},
    {0.3740866, 0.9841033, 0.01230667},
    {0.388641, 0.9874355, 0.01130138},
    {0.403375, 0.9903277, 0.01037816},
    {0.4183077, 0.9928231, 0.009529743},
    {0.4334499, 0.9949501, 0.008749999},
    {0.4487938, 0.9967091, 0.008035359},
    {0.4643326, 0.9981041, 0.007381839},
    {0.4800607, 0.9991279, 0.006785519},
    {0.4959699, 0.9997641, 0.006242799},
    {0.5120501, 1, 0.005749999},
    {0.5282922, 0.9998398, 0.005303439},
    {0.5446883, 0.999289, 0.004899919},
    {0.5612113, 0.9983219, 0.0045348},
    {0.5778246, 0.9969, 0.00420288},
    {0.5945, 0.995, 0.0039},
    {0.6112241, 0.9926246, 0.00362368},
    {0.6279776, 0.9897695, 0.0033712},
    {0.6447567, 0.9864572, 0.003141519},
    {0.6615658, 0.9827257, 0.002934639},
    {0.6784, 0.9786, 0.002749999},
    {0.6952363, 0.9740784, 0.002585359},
    {0.7120551, 0.9691664, 0.002438719},
    {0.7288279, 0.9638576, 0.00230928},
    {0.7455199, 0.9581376, 0.00219664},
    {0.7621, 0.952, 0.0021},
    {0.7785445, 0.9454533, 0.00201768},
    {0.7948251, 0.9385016, 0.00194808},
    {0.8109226, 0.9311611, 0.00188968},
    {0.8268216, 0.923455, 0.00184088},
    {0.8425, 0.9154, 0.0018},
    {0.8579272, 0.9070026, 0.00176584},
    {0.8730778, 0.8982755, 0.00173768},
    {0.8878987, 0.8892101, 0.001711921},
    {0.9023237, 0.879787, 0.001683761},
    {0.9163, 0.87, 0.001650001},
    {0.9298029, 0.8598659, 0.001610561},
    {0.9428027, 0.8493973, 0.001565121},
    {0.9552786, 0.8386222, 0.00151408},
    {0.9672168, 0.8275792, 0.00145864},
    {0.9786, 0.8163, 0.0014},
    {0.9893917, 0.8047968, 0.00133768},
    {0.9995498, 0.7930822, 0.00127048},
    {1.009077, 0.7811877, 0.00120368},
    {1.017996, 0.7691507, 0.00114528},
    {1.0263, 0.757, 0.0011},
    {1.033961, 0.7447498, 0.0010672},
    {1.040974, 0.7324181, 0.00104808},
    {1.047213, 0.7200048, 0.00103656},
    {1.052494, 0.7074995, 0.00102264},
    {1.0567, 0.6949, 0.001},
    {1.059824, 0.6822211, 0.000969664},
    {1.061824, 0.6694728, 0.00093088},
    {1.06279, 0.6566725, 0.000886496},
    {1.062883, 0.6438426, 0.000841792},
    {1.0622, 0.631, 0.0008},
    {1.06071, 0.6181528, 0.00076032},
    {1.058427, 0.6053125, 0.000723296},
    {1.055247, 0.5924778, 0.000686592},
    {1.051005, 0.5796406, 0.000646208},
    {1.0456, 0.5668, 0.0006},
    {1.039061, 0.5539651, 0.000548816},
    {1.031384, 0.5411394, 0.000492272},
    {1.022657, 0.528348, 0.000434608},
    {1.01303, 0.515627, 0.000382464},
    {1.0026, 0.503, 0.00034},
    {0.9913603, 0.4904656, 0.000306528},
    {0.9793224, 0.4780256, 0.000282368},
    {0.9664897, 0.4656752, 0.000265488},
    {0.9528502, 0.4534032, 0.000252208},
    {0.9384, 0.4412, 0.00024},
    {0.9231789, 0.4290723, 0.000229408},
    {0.907242, 0.4170336, 0.000220688},
    {0.8905319, 0.4050445, 0.000212368},
    {0.8729474, 0.3930442, 0.000202528},
    {0.8544499, 0.381, 0.00019},
    {0.8351092, 0.3689293, 0.000174672},
    {0.8149759, 0.3568397, 0.000156048},
    {0.7941891, 0.3447773, 0.000135744},
    {0.7729434, 0.3328125, 0.00011648},
    {0.7514, 0.321, 0.0001},
    {0.7296039, 0.309345, 8.5952e-05},
    {0.7075919, 0.2978509, 7.4384e-05},
    {0.6855627, 0.2865792, 6.497599e-05},
    {0.6637739, 0.2756115, 5.700799e-05},
    {0.6424, 0.265, 4.999999e-05},
    {0.6214773, 0.2547491, 4.412799e-05},
    {0.6010743, 0.2448752, 3.945599e-05},
    {0.581111, 0.2353373, 3.5744e-05},
    {0.5614204, 0.2260618, 3.2672e-05},
    {0.5419, 0.217, 3e-05},
    {0.5226019, 0.2081629, 2.7664e-05},
    {0.5035522, 0.1995517, 2.5584e-05},
    {0.4847496, 0.1911581, 2.3664e-05},
    {0.4661966, 0.1829757, 2.1824e-05},
    {0.4479, 0.175, 2e-05},
    {0.4298669, 0.1672262, 1.8144e-05},
    {0.412104, 0.1596493, 1.6224e-05},
    {0.3946435, 0.1522771, 1.4224e-05},
    {0.3775302, 0.1451242, 1.2144e-05},
    {0.3608, 0.1382, 1e-05},
    {0.3444603, 0.1315011, 7.776e-06},
    {0.3285163, 0.1250243, 5.424e-06},
    {0.3130091, 0.1187763, 3.152e-06},
    {0.2979923, 0.1127667, 1.28e-06},
    {0.2835, 0.107, 0},
    {0.2695352, 0.1014732, 0},
    {0.2561083, 0.09618576, 0},
    {0.243191, 0.09112387, 0},
    {0.230733, 0.08626694, 0},
    {0.2187, 0.0816, 0},
    {0.2070976, 0.07712115, 1.28e-07},
    {0.1959246, 0.07282643, 1.44e-07},
    {0.1851725, 0.06871075, 8e-08},
    {0.1748331, 0.06476995, 1.6e-08},
    {0.1649, 0.061, 0},
    {0.1553678, 0.05739651, 0},
    {0.1462317, 0.05395571, 0},
    {0.1374907, 0.05067443, 0},
    {0.1291466, 0.04754995, 0},
    {0.1212, 0.04458, 0},
    {0.1136436, 0.04176051, 0},
    {0.1064657, 0.03908563, 0},
    {0.09968293, 0.03656115, 0},
    {0.09332362, 0.03419779, 0},
    {0.0874, 0.032, 0},
    {0.08189533, 0.02996054, 0},
    {0.07679677, 0.02807395, 0},
    {0.07207477, 0.02632864, 0},
    {0.06768789, 0.02470861, 0},
    {0.0636, 0.0232, 0},
    {0.05979973, 0.02179829, 0},
    {0.05627981, 0.0205004, 0},
    {0.05298237, 0.01928523, 0},
    {0.04982973, 0.0181247, 0},
    {0.04677, 0.017, 0},
    {0.04379523, 0.01590791, 0},
    {0.04088669, 0.01484134, 0},
    {0.03807014, 0.01380972, 0},
    {0.03539736, 0.01283209, 0},
    {0.0329, 0.01192, 0},
    {0.03056264, 0.01106769, 0},
    {0.02837806, 0.01027244, 0},
    {0.02634332, 0.009532808, 0},
    {0.0244525, 0.008846133, 0},
    {0.0227, 0.00821, 0},
    {0.02108317, 0.007623398, 0},
    {0.01959844, 0.00708492, 0},
    {0.01823697, 0.00659133, 0},
    {0.01698753, 0.006138579, 0},
    {0.01584, 0.005723, 0},
    {0.01478916, 0.005342603, 0},
    {0.01383043, 0.00499565, 0},
    {0.01295001, 0.004677136, 0},
    {0.01213051, 0.00438079, 0},
    {0.01135916, 0.004102, 0},
    {0.01063146, 0.003839094, 0},
    {0.009941282, 0.003589832, 0},
    {0.009288794, 0.003354242, 0},
    {0.008678157, 0.003133787, 0},
    {0.008110916, 0.002929, 0},
    {0.007582211, 0.002738112, 0},
    {0.007088691, 0.002559898, 0},
    {0.006627535, 0.002393347, 0},
    {0.006195621, 0.002237357, 0},
    {0.005790346, 0.002091, 0},
    {0.005410016, 0.001953656, 0},
    {0.005052868, 0.001824683, 0},
    {0.004717652, 0.00170363, 0},
    {0.004403503, 0.001590186, 0},
    {0.004109457, 0.001484, 0},
    {0.003834046, 0.001384544, 0},
    {0.003575888, 0.001291318, 0},
    {0.003334323, 0.001204085, 0},
    {0.003108996, 0.001122715, 0},
    {0.002899327, 0.001047, 0},
    {0.00270428, 0.000976565, 0},
    {0.002523, 0.0009111016, 0},
    {0.002354282, 0.0008501742, 0},
    {0.002196726, 0.0007932781, 0},
    {0.00204919, 0.00074, 0},
    {0.001911026, 0.0006901066, 0},
    {0.001781552, 0.000643351, 0},
    {0.001660188, 0.0005995243, 0},
    {0.001546478, 0.0005584616, 0},
    {0.001439971, 0.00052, 0},
    {0.001340106, 0.000483937, 0},
    {0.001246353, 0.0004500811, 0},
    {0.001158482, 0.0004183493, 0},
    {0.001076405, 0.0003887094, 0},
    {0.0009999493, 0.0003611, 0},
    {0.0009287363, 0.0003353837, 0},
    {0.0008624445, 0.0003114445, 0},
    {0.0008007716, 0.0002891733, 0},
    {0.0007434098, 0.0002684589, 0},
    {0.0006900786, 0.0002492, 0},
    {0.0006405329, 0.0002313082, 0},
    {0.0005945234, 0.0002146933, 0},
    {0.0005518679, 0.0001992896, 0},
    {0.0005124224, 0.0001850451, 0},
    {0.0004760213, 0.0001719, 0},
    {0.0004424496, 0.0001597766, 0},
    {0.000411515, 0.0001486056, 0},
    {0.0003829974, 0.0001383074, 0},
    {0.0003566619, 0.0001287971, 0},
    {0.0003323011, 0.00012, 0},
    {0.0003097636, 0.0001118613, 0},
    {0.000288903, 0.0001043282, 0},
    {0.00026956, 9.734304e-05, 0},
    {0.0002515794, 9.084992e-05, 0},
    {0.0002348261, 8.48e-05, 0},
    {0.0002191858, 7.9152e-05, 0},
    {0.0002045464, 7.386544e-05, 0},
    {0.0001908485, 6.891888e-05, 0},
    {0.0001780633, 6.430192e-05, 0},
    {0.0001661505, 6e-05, 0},
    {0.0001550295, 5.5984e-05, 0},
    {0.0001446298, 5.222848e-05, 0},
    {0.0001349124, 4.871936e-05, 0},
    {0.0001258508, 4.544704e-05, 0},
    {0.000117413, 4.24e-05, 0},
    {0.000109552, 3.956126e-05, 0},
    {0.0001022271, 3.691608e-05, 0},
    {9.539835e-05, 3.44501e-05, 0},
    {8.90262e-05, 3.214899e-05, 0},
    {8.307527e-05, 3e-05, 0},
    {7.751548e-05, 2.799226e-05, 0},
    {7.231696e-05, 2.611498e-05, 0},
    {6.745938e-05, 2.436082e-05, 0},
    {6.292812e-05, 2.27245e-05, 0},
    {5.870652e-05, 2.12e-05, 0},
    {5.477108e-05, 1.977884e-05, 0},
    {5.110076e-05, 1.845342e-05, 0},
    {4.76779e-05, 1.721736e-05, 0},
    {4.448619e-05, 1.606478e-05, 0},
    {4.150994e-05, 1.499e-05, 0},
    {3.873375e-05, 1.398747e-05, 0},
    {3.61434e-05, 1.305204e-05, 0},
    {3.372508e-05, 1.217874e-05, 0},
    {3.146565e-05, 1.136282e-05, 0},
    {2.935326e-05, 1.06e-05, 0},
    {2.737695e-05, 9.886319e-06, 0},
    {2.552589e-05, 9.217868e-06, 0},
    {2.379413e-05, 8.592496e-06, 0},
    {2.217833e-05, 8.009002e-06, 0},
    {2.067383e-05, 7.4657e-06, 0},
    {1.927235e-05, 6.959601e-06, 0},
    {1.796676e-05, 6.488129e-06, 0},
    {1.675044e-05, 6.048892e-06, 0},
    {1.561678e-05, 5.639507e-06, 0},
    {1.455977e-05, 5.2578e-06, 0},
    {1.357417e-05, 4.901881e-06, 0},
    {1.265489e-05, 4.569912e-06, 0},
    {1.179761e-05, 4.260332e-06, 0},
    {1.099854e-05, 3.971775e-06, 0},
    {1.025398e-05, 3.7029e-06, 0},
    {9.559865e-06, 3.452242e-06, 0},
    {8.912424e-06, 3.21844e-06, 0},
    {8.308623e-06, 3.000396e-06, 0},
    {7.745835e-06, 2.797163e-06, 0},
    {7.221456e-06, 2.6078e-06, 0},
    {6.732626e-06, 2.431275e-06, 0},
    {6.276689e-06, 2.266627e-06, 0},
    {5.851495e-06, 2.113082e-06, 0},
    {5.45517e-06, 1.969962e-06, 0},
    {5.085868e-06, 1.8366e-06, 0},
    {4.741578e-06, 1.71227e-06, 0},
    {4.420425e-06, 1.596296e-06, 0},
    {4.120912e-06, 1.488137e-06, 0},
    {3.841749e-06, 1.387326e-06, 0},
    {3.581652e-06, 1.2934e-06, 0},
    {3.339201e-06, 1.205847e-06, 0},
    {3.113079e-06, 1.12419e-06, 0},
    {2.902215e-06, 1.048043e-06, 0},
    {2.705671e-06, 9.770673e-07, 0},
    {2.522525e-06, 9.1093e-07, 0},
    {2.351534e-06, 8.491819e-07, 0},
    {2.191273e-06, 7.913087e-07, 0},
    {2.041741e-06, 7.3731e-07, 0},
    {1.903533e-06, 6.874009e-07, 0},
    {1.776509e-06, 6.4153e-07, 0},
    {1.659091e-06, 5.991282e-07, 0},
    {1.549872e-06, 5.596871e-07, 0},
    {1.446979e-06, 5.225308e-07, 0},
    {1.348127e-06, 4.868335e-07, 0},
    {1.251141e-06, 4.5181e-07, 0},
}};

}  // namespace hsi::cie1931
