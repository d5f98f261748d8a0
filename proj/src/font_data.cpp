// Generated by scripts/gen_font_data.py from the DejaVu fonts
// (Bitstream Vera / DejaVu license). Do not edit by hand.
#include "chartforge/font.hpp"

namespace chartforge::detail {

constexpr unsigned char k_monospace_10_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,8,130,0,0,128,0,0,0,0,0,65,16,
    0,0,0,0,0,0,0,64,81,62,240,41,10,0,0,0,0,0,156,224,96,144,7,0,
    0,0,0,70,97,1,26,138,1,0,0,0,0,35,24,104,58,185,0,0,0,0,0,0,
    0,0,0,0,0,0,0,128,32,4,65,16,4,130,0,0,0,16,4,130,32,8,66,16,
    0,0,0,128,196,48,18,0,0,0,0,0,0,0,0,192,15,0,0,0,0,0,0,0,
    0,0,0,0,67,16,0,0,0,0,0,0,12,0,0,0,0,0,0,0,0,0,0,48,
    0,0,0,0,0,65,8,66,16,130,0,0,0,0,48,146,36,73,18,3,0,0,0,0,
    14,130,32,8,226,1,0,0,0,128,3,65,8,33,120,0,0,0,0,192,72,16,3,65,
    14,0,0,0,0,96,28,36,249,16,4,0,0,0,0,158,224,64,16,228,0,0,0,0,
    0,39,8,158,36,113,0,0,0,0,224,65,0,130,16,4,0,0,0,0,48,146,196,72,
    146,7,0,0,0,0,142,36,121,16,228,0,0,0,0,0,0,48,0,0,48,0,0,0,
    0,0,0,12,0,0,12,65,0,0,0,0,48,51,48,48,0,0,0,0,0,0,240,3,
    63,0,0,0,0,0,0,32,48,48,35,0,0,0,0,0,224,65,24,66,0,4,0,0,
    0,0,112,98,94,150,101,46,112,0,0,0,12,3,72,158,20,2,0,0,0,128,39,73,
    158,36,121,0,0,0,0,192,9,130,32,8,28,0,0,0,0,56,146,36,73,146,3,0,
    0,0,0,158,32,120,130,224,1,0,0,0,128,39,8,158,32,8,0,0,0,0,192,9,
    130,38,73,28,0,0,0,0,72,146,228,73,146,4,0,0,0,0,30,130,32,8,226,1,
    0,0,0,0,7,65,16,132,57,0,0,0,0,32,41,134,163,72,50,0,0,0,0,8,
    130,32,8,130,15,0,0,0,0,243,220,182,97,24,2,0,0,0,128,100,89,146,166,73,
    0,0,0,0,192,72,146,36,73,12,0,0,0,0,120,146,228,9,130,0,0,0,0,0,
    140,36,73,146,196,64,0,0,0,0,28,18,137,67,34,17,1,0,0,0,0,28,73,96,
    32,200,3,0,0,0,128,31,65,16,4,65,0,0,0,0,64,146,36,73,146,24,0,0,
    0,0,8,37,73,98,24,6,0,0,0,0,16,10,181,24,30,137,4,0,0,0,0,32,
    73,12,195,72,33,0,0,0,0,204,18,195,32,8,2,0,0,0,0,62,132,32,132,224,
    3,0,0,0,12,65,16,4,65,16,12,0,0,0,32,8,4,129,32,16,4,0,0,192,
    32,8,130,32,8,194,0,0,0,0,140,36,1,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,126,0,0,32,0,0,0,0,0,0,0,0,0,0,0,112,32,79,242,0,0,
    0,0,65,16,60,73,146,60,0,0,0,0,0,0,78,16,4,14,0,0,0,128,32,200,
    147,36,201,3,0,0,0,0,0,224,36,79,224,0,0,0,0,12,32,60,130,32,8,0,
    0,0,0,0,0,79,146,36,15,114,0,0,16,4,193,147,36,73,2,0,0,0,16,0,
    112,16,4,241,0,0,0,0,4,0,28,4,65,16,196,0,0,64,16,4,73,113,36,9,
    0,0,0,48,8,130,32,8,2,3,0,0,0,0,0,240,24,16,4,1,0,0,0,0,
    0,60,73,146,36,0,0,0,0,0,0,70,146,36,6,0,0,0,0,0,192,147,36,201,
    19,4,0,0,0,0,224,36,73,242,32,8,0,0,0,0,120,130,32,8,0,0,0,0,
    0,0,78,96,32,7,0,0,0,0,8,194,35,8,2,3,0,0,0,0,0,144,36,73,
    226,0,0,0,0,0,0,36,73,98,24,0,0,0,0,0,0,16,10,49,60,18,0,0,
    0,0,0,0,72,12,195,72,0,0,0,0,0,0,146,4,49,12,97,0,0,0,0,128,
    7,0,128,7,0,0,0,96,8,64,24,4,128,96,0,0,0,0,0,0,0,0,0,0,
    0,0,128,65,0,8,134,0,132,1,0,0,0,0,0,96,96,0,0,0,0,
};
constexpr GlyphInfo k_monospace_10_glyphs[] = {
    {0, 6, 6},
    {78, 6, 6},
    {156, 6, 6},
    {234, 6, 6},
    {312, 6, 6},
    {390, 6, 6},
    {468, 6, 6},
    {546, 6, 6},
    {624, 6, 6},
    {702, 6, 6},
    {780, 6, 6},
    {858, 6, 6},
    {936, 6, 6},
    {1014, 6, 6},
    {1092, 6, 6},
    {1170, 6, 6},
    {1248, 6, 6},
    {1326, 6, 6},
    {1404, 6, 6},
    {1482, 6, 6},
    {1560, 6, 6},
    {1638, 6, 6},
    {1716, 6, 6},
    {1794, 6, 6},
    {1872, 6, 6},
    {1950, 6, 6},
    {2028, 6, 6},
    {2106, 6, 6},
    {2184, 6, 6},
    {2262, 6, 6},
    {2340, 6, 6},
    {2418, 6, 6},
    {2496, 6, 6},
    {2574, 6, 6},
    {2652, 6, 6},
    {2730, 6, 6},
    {2808, 6, 6},
    {2886, 6, 6},
    {2964, 6, 6},
    {3042, 6, 6},
    {3120, 6, 6},
    {3198, 6, 6},
    {3276, 6, 6},
    {3354, 6, 6},
    {3432, 6, 6},
    {3510, 6, 6},
    {3588, 6, 6},
    {3666, 6, 6},
    {3744, 6, 6},
    {3822, 6, 6},
    {3900, 7, 6},
    {3991, 6, 6},
    {4069, 6, 6},
    {4147, 6, 6},
    {4225, 6, 6},
    {4303, 7, 6},
    {4394, 6, 6},
    {4472, 6, 6},
    {4550, 6, 6},
    {4628, 6, 6},
    {4706, 6, 6},
    {4784, 6, 6},
    {4862, 6, 6},
    {4940, 7, 6},
    {5031, 6, 6},
    {5109, 6, 6},
    {5187, 6, 6},
    {5265, 6, 6},
    {5343, 6, 6},
    {5421, 6, 6},
    {5499, 6, 6},
    {5577, 6, 6},
    {5655, 6, 6},
    {5733, 6, 6},
    {5811, 6, 6},
    {5889, 6, 6},
    {5967, 6, 6},
    {6045, 6, 6},
    {6123, 6, 6},
    {6201, 6, 6},
    {6279, 6, 6},
    {6357, 6, 6},
    {6435, 6, 6},
    {6513, 6, 6},
    {6591, 6, 6},
    {6669, 6, 6},
    {6747, 6, 6},
    {6825, 7, 6},
    {6916, 6, 6},
    {6994, 6, 6},
    {7072, 6, 6},
    {7150, 6, 6},
    {7228, 6, 6},
    {7306, 6, 6},
    {7384, 6, 6},
};
constexpr unsigned char k_monospace_12_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,2,129,64,32,16,0,4,2,
    0,0,0,0,0,10,133,2,0,0,0,0,0,0,0,0,0,0,0,64,65,241,163,160,
    248,147,80,0,0,0,0,0,0,8,142,75,193,192,161,84,60,4,2,0,0,0,96,144,
    144,96,130,32,131,132,4,3,0,0,0,0,0,192,97,96,64,224,160,20,37,194,5,0,
    0,0,0,0,16,8,4,0,0,0,0,0,0,0,0,0,128,32,16,8,4,2,129,64,
    32,32,0,0,0,64,64,32,16,16,8,4,129,64,16,0,0,0,0,128,80,113,56,42,
    4,0,0,0,0,0,0,0,0,0,64,32,16,126,4,2,1,0,0,0,0,0,0,0,
    0,0,0,0,4,2,1,0,0,0,0,0,0,0,0,112,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,16,8,0,0,0,0,0,64,32,8,4,129,32,16,4,2,0,0,
    0,0,112,76,34,145,74,36,50,113,0,0,0,0,0,240,96,48,24,12,6,131,225,1,
    0,0,0,0,192,145,129,64,16,4,195,224,3,0,0,0,0,128,35,2,193,56,32,144,
    136,3,0,0,0,0,0,4,131,161,72,36,126,8,4,0,0,0,0,0,159,64,224,129,
    129,64,50,14,0,0,0,0,0,28,147,64,99,18,137,76,28,0,0,0,0,0,124,32,
    24,4,130,64,32,8,0,0,0,0,0,112,76,34,19,71,36,18,113,0,0,0,0,0,
    224,136,68,34,17,15,4,227,0,0,0,0,0,0,0,0,16,8,0,0,129,0,0,0,
    0,0,0,0,0,32,16,0,0,2,129,0,0,0,0,0,0,0,198,25,12,56,48,0,
    0,0,0,0,0,0,0,0,240,3,252,0,0,0,0,0,0,0,0,128,128,1,131,49,
    4,0,0,0,0,0,0,56,32,16,4,129,0,32,16,0,0,0,0,0,0,120,38,97,
    62,153,204,11,12,56,0,0,0,0,2,7,5,5,141,136,143,216,16,0,0,0,0,0,
    240,136,68,34,143,72,44,242,1,0,0,0,0,128,35,8,4,2,129,128,128,3,0,0,
    0,0,192,35,19,137,68,34,145,204,3,0,0,0,0,128,79,32,16,248,4,2,129,15,
    0,0,0,0,0,191,193,96,240,25,12,6,3,0,0,0,0,0,60,131,64,32,19,137,
    76,60,0,0,0,0,0,68,34,145,200,39,18,137,68,0,0,0,0,0,248,16,8,4,
    2,129,64,248,0,0,0,0,0,224,193,96,48,24,12,6,241,0,0,0,0,0,0,49,
    25,13,7,7,9,25,17,49,0,0,0,0,0,32,16,8,4,2,129,64,224,7,0,0,
    0,0,96,124,190,95,183,203,225,112,8,0,0,0,0,128,201,100,82,169,100,50,153,8,
    0,0,0,0,0,142,73,36,18,139,68,38,14,0,0,0,0,0,62,145,88,228,19,8,
    4,2,0,0,0,0,0,56,38,145,72,44,18,153,56,48,16,0,0,0,192,67,68,68,
    196,67,70,68,76,8,0,0,0,0,0,112,68,2,3,7,4,18,113,0,0,0,0,0,
    248,35,16,8,4,2,129,64,0,0,0,0,0,32,18,137,68,34,145,72,196,1,0,0,
    0,0,96,40,18,137,72,20,10,7,1,0,0,0,0,0,130,130,146,180,164,108,108,108,
    76,0,0,0,0,0,0,196,76,40,48,48,56,104,68,134,0,0,0,0,0,0,198,68,
    104,56,16,16,16,16,16,0,0,0,0,0,128,31,4,131,32,16,4,129,31,0,0,0,
    0,24,4,2,129,64,32,16,8,4,6,0,0,0,0,2,1,129,128,64,64,32,32,16,
    0,0,0,112,48,24,12,6,131,193,96,48,28,0,0,0,0,96,40,34,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,31,0,64,64,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,120,64,32,158,72,196,2,0,0,0,128,64,
    32,208,152,68,34,145,201,3,0,0,0,0,0,0,128,35,8,4,2,2,14,0,0,0,
    0,32,16,136,39,19,137,68,50,22,0,0,0,0,0,0,0,199,36,242,11,76,28,0,
    0,0,0,192,16,8,31,2,129,64,32,16,0,0,0,0,0,0,0,60,153,72,36,146,
    177,64,48,14,0,32,16,8,52,38,145,72,36,18,1,0,0,0,0,1,0,56,16,8,
    4,2,225,3,0,0,0,0,4,0,224,64,32,16,8,4,130,65,56,0,0,12,12,12,
    76,44,28,60,44,76,204,0,0,0,0,0,7,2,129,64,32,16,8,4,14,0,0,0,
    0,0,0,192,167,84,42,149,74,37,0,0,0,0,0,0,128,198,36,18,137,68,34,0,
    0,0,0,0,0,0,142,73,36,18,153,56,0,0,0,0,0,0,0,30,147,72,36,50,
    121,4,2,1,0,0,0,0,120,54,145,72,100,227,129,64,32,0,0,0,0,240,25,4,
    2,129,64,0,0,0,0,0,0,0,224,152,12,28,144,136,3,0,0,0,0,0,2,225,
    67,32,16,8,4,14,0,0,0,0,0,0,64,36,18,137,68,38,22,0,0,0,0,0,
    0,128,72,100,162,80,56,8,0,0,0,0,0,0,0,16,20,164,164,98,99,99,2,0,
    0,0,0,0,0,0,17,133,131,224,144,68,0,0,0,0,0,0,0,98,145,137,70,193,
    32,16,8,3,0,0,0,0,124,32,8,130,64,240,1,0,0,0,0,134,64,32,16,14,
    4,2,129,128,1,0,0,0,2,129,64,32,16,8,4,2,129,64,0,0,0,7,2,129,
    64,192,16,8,4,194,1,0,0,0,0,0,0,0,112,192,0,0,0,0,0,0,
};
constexpr GlyphInfo k_monospace_12_glyphs[] = {
    {0, 7, 7},
    {105, 7, 7},
    {210, 7, 7},
    {315, 8, 7},
    {435, 7, 7},
    {540, 8, 7},
    {660, 8, 7},
    {780, 7, 7},
    {885, 7, 7},
    {990, 7, 7},
    {1095, 7, 7},
    {1200, 7, 7},
    {1305, 7, 7},
    {1410, 7, 7},
    {1515, 7, 7},
    {1620, 7, 7},
    {1725, 7, 7},
    {1830, 7, 7},
    {1935, 7, 7},
    {2040, 7, 7},
    {2145, 7, 7},
    {2250, 7, 7},
    {2355, 7, 7},
    {2460, 7, 7},
    {2565, 7, 7},
    {2670, 7, 7},
    {2775, 7, 7},
    {2880, 7, 7},
    {2985, 7, 7},
    {3090, 7, 7},
    {3195, 7, 7},
    {3300, 7, 7},
    {3405, 7, 7},
    {3510, 8, 7},
    {3630, 7, 7},
    {3735, 7, 7},
    {3840, 7, 7},
    {3945, 7, 7},
    {4050, 7, 7},
    {4155, 7, 7},
    {4260, 7, 7},
    {4365, 7, 7},
    {4470, 7, 7},
    {4575, 8, 7},
    {4695, 7, 7},
    {4800, 7, 7},
    {4905, 7, 7},
    {5010, 7, 7},
    {5115, 7, 7},
    {5220, 7, 7},
    {5325, 8, 7},
    {5445, 7, 7},
    {5550, 7, 7},
    {5655, 7, 7},
    {5760, 7, 7},
    {5865, 8, 7},
    {5985, 8, 7},
    {6105, 8, 7},
    {6225, 7, 7},
    {6330, 7, 7},
    {6435, 7, 7},
    {6540, 7, 7},
    {6645, 7, 7},
    {6750, 8, 7},
    {6870, 7, 7},
    {6975, 7, 7},
    {7080, 7, 7},
    {7185, 7, 7},
    {7290, 7, 7},
    {7395, 7, 7},
    {7500, 7, 7},
    {7605, 7, 7},
    {7710, 7, 7},
    {7815, 7, 7},
    {7920, 7, 7},
    {8025, 8, 7},
    {8145, 7, 7},
    {8250, 7, 7},
    {8355, 7, 7},
    {8460, 7, 7},
    {8565, 7, 7},
    {8670, 7, 7},
    {8775, 7, 7},
    {8880, 7, 7},
    {8985, 7, 7},
    {9090, 7, 7},
    {9195, 7, 7},
    {9300, 8, 7},
    {9420, 7, 7},
    {9525, 7, 7},
    {9630, 7, 7},
    {9735, 7, 7},
    {9840, 7, 7},
    {9945, 7, 7},
    {10050, 7, 7},
};
constexpr unsigned char k_monospace_14_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,16,16,16,16,
    16,16,0,0,16,16,0,0,0,0,0,0,0,44,44,44,44,0,0,0,0,0,0,0,
    0,0,0,0,0,0,192,130,4,137,63,22,36,254,209,176,32,1,0,0,0,0,0,0,
    32,32,120,168,44,40,112,160,160,165,120,32,32,0,0,0,0,0,224,32,65,2,103,48,
    16,136,129,4,9,12,0,0,0,0,0,0,0,128,7,1,2,4,24,104,154,37,206,12,
    47,0,0,0,0,0,0,0,128,128,128,128,0,0,0,0,0,0,0,0,0,0,0,0,
    0,129,128,192,64,64,64,64,192,128,128,0,1,0,0,0,0,64,64,128,128,128,128,128,
    128,128,128,64,64,0,0,0,0,0,0,128,144,194,193,145,130,0,0,0,0,0,0,0,
    0,0,0,0,0,0,128,128,128,240,135,128,128,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,192,192,192,64,0,0,0,0,0,0,0,0,0,0,0,224,1,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,192,0,0,0,0,0,0,0,
    0,2,3,1,129,128,64,64,96,32,48,16,0,0,0,0,0,192,33,51,18,18,146,18,
    50,34,195,1,0,0,0,0,0,0,192,160,128,128,128,128,128,128,128,224,3,0,0,0,
    0,0,0,224,17,3,2,2,131,193,96,32,240,3,0,0,0,0,0,0,224,17,3,2,
    195,1,3,2,18,227,1,0,0,0,0,0,0,128,129,65,33,33,17,241,7,1,1,1,
    0,0,0,0,0,0,240,51,48,240,1,3,2,2,18,227,1,0,0,0,0,0,0,192,
    33,50,16,208,49,50,50,34,194,1,0,0,0,0,0,0,240,3,2,3,129,129,128,192,
    64,96,0,0,0,0,0,0,0,224,49,51,34,227,49,19,18,50,226,1,0,0,0,0,
    0,0,224,49,19,18,50,227,2,2,2,227,1,0,0,0,0,0,0,0,0,0,192,192,
    0,0,0,192,192,0,0,0,0,0,0,0,0,0,0,192,192,0,0,0,192,192,192,64,
    0,0,0,0,0,0,0,0,132,227,48,224,128,3,4,0,0,0,0,0,0,0,0,0,
    0,240,7,0,240,7,0,0,0,0,0,0,0,0,0,0,0,16,112,128,3,134,115,16,
    0,0,0,0,0,0,0,0,192,33,3,2,131,193,192,0,192,192,0,0,0,0,0,0,
    0,0,30,98,130,228,37,74,148,40,145,60,1,4,240,0,0,0,0,0,0,12,56,80,
    176,32,65,196,143,16,97,131,0,0,0,0,0,0,0,192,199,200,200,200,199,200,216,216,
    200,7,0,0,0,0,0,0,0,143,193,192,64,64,192,192,128,1,15,0,0,0,0,0,
    0,192,67,76,72,72,88,88,72,72,204,3,0,0,0,0,0,0,192,207,192,192,192,207,
    192,192,192,192,31,0,0,0,0,0,0,128,159,128,128,128,143,128,128,128,128,0,0,0,
    0,0,0,0,0,135,192,64,64,64,92,216,152,24,15,0,0,0,0,0,0,64,88,88,
    88,216,95,88,88,88,88,24,0,0,0,0,0,0,192,15,2,2,2,2,2,2,2,194,
    15,0,0,0,0,0,0,0,15,12,12,12,12,12,12,68,132,3,0,0,0,0,0,0,
    0,194,196,200,208,224,193,130,12,49,66,132,1,0,0,0,0,0,0,128,129,129,129,129,
    129,129,129,129,129,63,0,0,0,0,0,0,128,177,185,185,170,166,166,160,160,160,32,0,
    0,0,0,0,0,128,145,145,147,146,150,148,148,152,152,16,0,0,0,0,0,0,0,15,
    153,145,176,176,176,176,17,25,15,0,0,0,0,0,0,128,143,145,177,177,145,143,129,129,
    129,1,0,0,0,0,0,0,0,15,153,145,176,176,176,176,17,25,15,8,16,0,0,0,
    0,0,124,136,17,34,68,140,15,17,66,132,9,2,0,0,0,0,0,0,0,30,35,1,
    3,14,56,32,32,33,30,0,0,0,0,0,0,0,252,131,0,1,2,4,8,16,32,64,
    128,0,0,0,0,0,0,0,0,66,66,66,66,66,66,66,66,70,60,0,0,0,0,0,
    0,0,16,38,76,136,17,50,36,88,160,192,128,1,0,0,0,0,0,0,0,16,104,208,
    32,77,154,148,169,49,99,198,12,0,0,0,0,0,0,0,64,24,17,22,56,48,224,96,
    65,198,200,32,0,0,0,0,0,0,0,128,48,35,100,88,224,192,0,1,2,4,8,0,
    0,0,0,0,0,0,224,15,12,6,2,131,129,192,96,224,15,0,0,0,0,0,128,131,
    128,128,128,128,128,128,128,128,128,128,3,0,0,0,0,0,32,96,64,192,128,128,0,1,
    1,2,2,6,4,0,0,0,192,1,1,1,1,1,1,1,1,1,1,193,1,0,0,0,
    0,0,128,193,67,38,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,248,7,0,128,1,1,2,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,128,7,12,136,207,72,200,140,11,0,0,0,0,0,192,
    192,192,192,199,200,200,216,216,200,200,7,0,0,0,0,0,0,0,0,0,143,129,192,192,
    128,128,1,15,0,0,0,0,0,0,8,8,136,203,76,72,72,72,200,140,11,0,0,0,
    0,0,0,0,0,0,135,72,200,95,64,128,8,7,0,0,0,0,0,0,14,2,195,15,
    3,3,3,3,3,3,3,0,0,0,0,0,0,0,0,128,203,76,72,72,72,200,140,11,
    8,140,7,0,0,192,192,192,192,199,204,200,200,200,200,200,8,0,0,0,0,0,0,2,
    2,128,3,2,2,2,2,2,194,15,0,0,0,0,0,0,2,2,128,3,2,2,2,2,
    2,2,2,2,194,1,0,0,0,2,4,8,16,33,65,129,3,13,18,68,136,1,0,0,
    0,0,0,128,3,2,2,2,2,2,2,2,2,6,28,0,0,0,0,0,0,0,0,128,
    155,182,164,164,164,164,164,36,0,0,0,0,0,0,0,0,128,143,153,145,145,145,145,145,
    17,0,0,0,0,0,0,0,0,0,15,153,144,144,144,16,25,15,0,0,0,0,0,0,
    0,0,128,143,153,145,177,177,145,153,143,129,129,1,0,0,0,0,0,0,23,153,144,144,
    144,16,25,23,16,16,16,0,0,0,0,0,0,63,7,3,3,3,3,3,3,0,0,0,
    0,0,0,0,0,0,15,17,1,7,28,16,24,15,0,0,0,0,0,0,0,2,130,31,
    2,2,2,2,2,6,28,0,0,0,0,0,0,0,0,128,145,145,145,145,145,17,25,23,
    0,0,0,0,0,0,0,0,128,176,16,17,25,9,10,14,6,0,0,0,0,0,0,0,
    0,0,8,52,72,146,54,37,110,204,144,1,0,0,0,0,0,0,0,0,0,35,50,28,
    12,12,22,50,97,0,0,0,0,0,0,0,0,0,97,35,34,50,22,20,12,8,12,4,
    7,0,0,0,0,0,0,62,48,16,8,12,6,2,63,0,0,0,0,0,0,56,8,8,
    8,8,12,6,12,8,8,8,8,56,0,0,0,0,8,8,8,8,8,8,8,8,8,8,
    8,8,8,8,0,0,0,6,12,8,8,8,8,56,8,8,8,8,12,6,0,0,0,0,
    0,0,0,0,0,0,71,56,0,0,0,0,0,0,0,
};
constexpr GlyphInfo k_monospace_14_glyphs[] = {
    {0, 8, 8},
    {136, 8, 8},
    {272, 8, 8},
    {408, 9, 8},
    {561, 8, 8},
    {697, 9, 8},
    {850, 9, 8},
    {1003, 8, 8},
    {1139, 8, 8},
    {1275, 8, 8},
    {1411, 8, 8},
    {1547, 8, 8},
    {1683, 8, 8},
    {1819, 8, 8},
    {1955, 8, 8},
    {2091, 8, 8},
    {2227, 8, 8},
    {2363, 8, 8},
    {2499, 8, 8},
    {2635, 8, 8},
    {2771, 8, 8},
    {2907, 8, 8},
    {3043, 8, 8},
    {3179, 8, 8},
    {3315, 8, 8},
    {3451, 8, 8},
    {3587, 8, 8},
    {3723, 8, 8},
    {3859, 8, 8},
    {3995, 8, 8},
    {4131, 8, 8},
    {4267, 8, 8},
    {4403, 9, 8},
    {4556, 9, 8},
    {4709, 8, 8},
    {4845, 8, 8},
    {4981, 8, 8},
    {5117, 8, 8},
    {5253, 8, 8},
    {5389, 8, 8},
    {5525, 8, 8},
    {5661, 8, 8},
    {5797, 8, 8},
    {5933, 9, 8},
    {6086, 8, 8},
    {6222, 8, 8},
    {6358, 8, 8},
    {6494, 8, 8},
    {6630, 8, 8},
    {6766, 8, 8},
    {6902, 9, 8},
    {7055, 8, 8},
    {7191, 9, 8},
    {7344, 8, 8},
    {7480, 9, 8},
    {7633, 9, 8},
    {7786, 9, 8},
    {7939, 9, 8},
    {8092, 8, 8},
    {8228, 8, 8},
    {8364, 8, 8},
    {8500, 8, 8},
    {8636, 8, 8},
    {8772, 9, 8},
    {8925, 8, 8},
    {9061, 8, 8},
    {9197, 8, 8},
    {9333, 8, 8},
    {9469, 8, 8},
    {9605, 8, 8},
    {9741, 8, 8},
    {9877, 8, 8},
    {10013, 8, 8},
    {10149, 8, 8},
    {10285, 8, 8},
    {10421, 9, 8},
    {10574, 8, 8},
    {10710, 8, 8},
    {10846, 8, 8},
    {10982, 8, 8},
    {11118, 8, 8},
    {11254, 8, 8},
    {11390, 8, 8},
    {11526, 8, 8},
    {11662, 8, 8},
    {11798, 8, 8},
    {11934, 8, 8},
    {12070, 9, 8},
    {12223, 8, 8},
    {12359, 8, 8},
    {12495, 8, 8},
    {12631, 8, 8},
    {12767, 8, 8},
    {12903, 8, 8},
    {13039, 8, 8},
};
constexpr unsigned char k_monospace_17_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,192,0,3,12,48,192,0,3,12,48,0,0,0,12,48,0,0,
    0,0,0,0,0,0,0,0,0,128,4,18,72,32,129,4,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,38,144,129,132,255,144,129,12,36,252,
    135,12,36,48,1,0,0,0,0,0,0,0,0,0,0,0,1,4,60,88,33,129,4,22,
    240,1,15,36,144,72,195,7,4,16,64,0,0,0,0,0,0,0,0,7,36,136,65,2,
    199,192,192,192,56,144,65,4,25,56,0,0,0,0,0,0,0,0,0,0,0,0,15,12,
    32,0,3,16,192,1,27,137,105,104,194,49,12,223,0,0,0,0,0,0,0,0,0,0,
    0,0,48,192,0,3,12,48,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,64,128,1,2,12,48,64,0,1,4,16,64,0,3,12,32,128,1,4,0,0,
    0,0,0,0,0,96,0,1,12,48,128,0,2,24,96,128,1,2,8,48,192,0,1,6,
    0,0,0,0,0,0,0,0,0,8,32,144,134,7,30,164,129,0,2,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,192,0,3,12,48,248,239,63,12,48,192,0,
    3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,3,12,48,64,128,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,120,
    224,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,48,192,0,3,0,0,0,0,0,0,0,0,0,0,0,128,1,2,12,
    16,96,128,0,3,4,24,96,192,0,3,4,24,0,0,0,0,0,0,0,0,0,224,193,
    12,97,134,25,102,155,109,134,25,70,24,51,120,0,0,0,0,0,0,0,0,0,0,0,
    128,7,25,96,128,1,6,24,96,128,1,6,24,96,240,7,0,0,0,0,0,0,0,0,
    0,0,0,31,198,0,6,24,96,192,128,1,3,4,24,48,224,31,0,0,0,0,0,0,
    0,0,0,0,0,120,16,3,24,96,192,224,1,12,96,128,1,38,12,31,0,0,0,0,
    0,0,0,0,0,0,0,128,3,14,60,216,32,195,140,49,194,248,7,12,48,192,0,0,
    0,0,0,0,0,0,0,0,0,192,15,1,4,16,192,7,49,128,1,6,24,96,194,240,
    1,0,0,0,0,0,0,0,0,0,0,0,28,140,16,96,128,29,142,24,102,152,97,132,
    49,130,7,0,0,0,0,0,0,0,0,0,0,0,254,1,6,8,48,64,128,1,6,8,
    48,192,128,1,6,0,0,0,0,0,0,0,0,0,0,0,224,193,136,97,134,49,130,7,
    35,134,25,102,24,99,120,0,0,0,0,0,0,0,0,0,0,0,128,7,51,134,25,102,
    152,97,204,225,7,24,32,196,224,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,3,12,48,0,0,0,0,48,192,0,3,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,12,48,192,0,0,0,0,192,0,3,12,16,96,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,1,135,135,3,14,224,1,28,64,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,224,191,255,0,0,224,191,255,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,32,128,7,112,0,7,28,28,30,8,0,0,0,0,0,
    0,0,0,0,0,0,0,0,120,16,3,24,32,192,128,1,3,12,48,0,0,3,12,0,
    0,0,0,0,0,0,0,0,0,0,192,195,144,193,226,203,60,241,132,25,78,56,177,204,
    226,19,128,0,60,0,0,0,0,0,0,0,0,3,28,120,96,129,12,51,204,16,230,159,
    97,2,13,12,0,0,0,0,0,0,0,0,0,0,128,31,134,25,102,152,97,254,24,102,
    144,65,6,25,230,15,0,0,0,0,0,0,0,0,0,0,0,240,32,198,0,1,6,24,
    96,128,1,6,48,128,16,60,0,0,0,0,0,0,0,0,0,0,0,248,96,140,33,134,
    25,102,152,97,134,25,102,152,49,62,0,0,0,0,0,0,0,0,0,0,0,192,31,1,
    4,16,64,0,127,4,16,64,0,1,4,240,7,0,0,0,0,0,0,0,0,0,0,0,
    127,12,48,192,0,3,252,49,192,0,3,12,48,192,0,0,0,0,0,0,0,0,0,0,
    0,0,240,48,70,128,1,6,24,96,156,65,6,17,196,24,60,0,0,0,0,0,0,0,
    0,0,0,0,24,102,152,97,134,25,230,159,97,134,25,102,152,97,134,1,0,0,0,0,
    0,0,0,0,0,0,192,31,12,48,192,0,3,12,48,192,0,3,12,48,240,7,0,0,
    0,0,0,0,0,0,0,0,0,62,192,0,3,12,48,192,0,3,12,48,192,152,193,3,
    0,0,0,0,0,0,0,0,0,0,0,96,48,195,24,195,12,54,240,129,15,204,96,12,
    99,24,198,96,0,0,0,0,0,0,0,0,0,0,0,0,2,8,32,128,0,2,8,32,
    128,0,2,8,32,128,63,0,0,0,0,0,0,0,0,0,0,0,12,55,220,121,165,149,
    150,91,102,153,5,22,88,96,129,1,0,0,0,0,0,0,0,0,0,0,48,204,49,199,
    60,179,204,54,211,76,51,207,56,227,12,3,0,0,0,0,0,0,0,0,0,0,0,15,
    102,12,51,204,48,195,12,51,204,48,195,152,193,3,0,0,0,0,0,0,0,0,0,0,
    0,126,8,35,136,32,130,8,227,135,0,2,8,32,128,0,0,0,0,0,0,0,0,0,
    0,0,0,240,96,198,48,195,12,51,204,48,195,12,51,140,25,60,128,1,4,0,0,0,
    0,0,0,0,0,0,63,24,195,48,134,49,140,49,252,96,12,67,24,198,32,6,3,0,
    0,0,0,0,0,0,0,0,0,0,224,193,136,1,6,24,192,3,56,128,1,6,152,97,
    124,0,0,0,0,0,0,0,0,0,0,0,240,63,12,48,192,0,3,12,48,192,0,3,
    12,48,192,0,0,0,0,0,0,0,0,0,0,0,128,97,134,25,102,152,97,134,25,102,
    152,97,134,49,130,7,0,0,0,0,0,0,0,0,0,0,0,2,27,100,24,97,132,48,
    194,12,18,88,224,1,7,12,0,0,0,0,0,0,0,0,0,0,0,192,128,6,54,48,
    153,201,76,46,90,113,138,115,156,195,28,70,0,0,0,0,0,0,0,0,0,0,0,0,
    192,32,132,97,6,54,224,0,3,56,96,129,25,140,49,204,192,0,0,0,0,0,0,0,
    0,0,0,0,0,2,27,198,8,51,88,192,1,3,12,48,192,0,3,12,0,0,0,0,
    0,0,0,0,0,0,0,248,15,24,96,192,128,1,6,12,24,96,192,128,1,254,3,0,
    0,0,0,0,0,0,0,0,192,1,1,4,16,64,0,1,4,16,64,0,1,4,16,64,
    0,1,28,0,0,0,0,0,0,0,0,128,1,4,48,192,0,6,24,64,0,3,8,96,
    0,1,12,32,128,1,0,0,0,0,0,0,0,14,32,128,0,2,8,32,128,0,2,8,
    32,128,0,2,8,32,224,0,0,0,0,0,0,0,0,0,192,128,7,51,132,25,4,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,127,0,0,0,0,4,32,0,
    1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,192,131,16,192,240,35,204,48,195,140,227,13,0,0,0,0,0,0,0,
    0,0,128,0,2,8,32,128,14,70,8,35,136,32,130,8,99,132,14,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,120,48,98,128,0,2,8,96,0,35,120,0,0,0,
    0,0,0,0,0,0,0,0,3,12,48,192,112,99,206,48,195,12,51,204,48,230,112,3,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,131,17,195,12,242,207,0,3,24,
    194,7,0,0,0,0,0,0,0,0,0,0,60,24,96,128,129,63,24,96,128,1,6,24,
    96,128,1,6,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,220,152,51,204,48,
    195,12,51,140,57,220,0,3,132,24,60,0,0,0,0,0,8,32,128,0,2,232,97,132,
    48,194,8,35,140,48,194,8,3,0,0,0,0,0,0,0,0,0,128,1,6,0,0,224,
    1,6,24,96,128,1,6,24,96,240,15,0,0,0,0,0,0,0,0,0,0,12,48,0,
    0,128,15,48,192,0,3,12,48,192,0,3,12,48,64,128,129,3,0,0,0,0,0,6,
    24,96,128,1,198,152,97,131,7,62,152,96,134,49,134,1,0,0,0,0,0,0,0,0,
    0,60,128,0,2,8,32,128,0,2,8,32,128,0,2,24,192,3,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,240,206,38,153,100,146,73,38,153,100,146,9,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,128,30,70,8,35,140,48,194,8,35,140,48,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,60,152,49,204,48,195,12,51,140,25,60,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,232,96,132,48,194,8,34,140,48,
    70,232,32,128,0,2,8,0,0,0,0,0,0,0,0,0,0,192,143,57,195,12,51,204,
    48,195,152,195,15,48,192,0,3,12,0,0,0,0,0,0,0,0,0,0,59,28,49,192,
    0,3,12,48,192,0,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,60,24,
    33,128,1,60,128,1,132,24,60,0,0,0,0,0,0,0,0,0,0,0,128,0,2,8,
    252,131,0,2,8,32,128,0,2,24,192,3,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,32,140,48,194,8,35,140,48,194,152,195,13,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,192,32,195,8,97,132,25,36,240,128,3,6,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,192,128,6,38,48,153,200,196,46,204,97,6,51,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,128,97,204,96,1,7,12,120,32,195,136,97,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,6,25,70,24,35,200,96,131,7,28,
    48,192,0,3,6,12,0,0,0,0,0,0,0,0,0,0,240,7,8,48,96,192,128,1,
    6,12,240,7,0,0,0,0,0,0,0,0,0,0,14,8,48,192,0,3,12,48,112,0,
    3,12,48,192,0,3,12,32,128,3,0,0,0,0,0,0,12,48,192,0,3,12,48,192,
    0,3,12,48,192,0,3,12,48,192,0,3,12,0,0,0,0,0,28,192,0,3,12,48,
    192,0,2,56,32,192,0,3,12,48,192,0,3,7,0,0,0,0,0,0,0,0,0,0,
    0,0,0,128,7,254,131,7,0,0,0,0,0,0,0,0,0,0,0,
};
constexpr GlyphInfo k_monospace_17_glyphs[] = {
    {0, 10, 10},
    {210, 10, 10},
    {420, 10, 10},
    {630, 11, 10},
    {861, 10, 10},
    {1071, 10, 10},
    {1281, 11, 10},
    {1512, 10, 10},
    {1722, 10, 10},
    {1932, 10, 10},
    {2142, 10, 10},
    {2352, 10, 10},
    {2562, 10, 10},
    {2772, 10, 10},
    {2982, 10, 10},
    {3192, 10, 10},
    {3402, 10, 10},
    {3612, 10, 10},
    {3822, 10, 10},
    {4032, 10, 10},
    {4242, 10, 10},
    {4452, 10, 10},
    {4662, 10, 10},
    {4872, 10, 10},
    {5082, 10, 10},
    {5292, 10, 10},
    {5502, 10, 10},
    {5712, 10, 10},
    {5922, 10, 10},
    {6132, 10, 10},
    {6342, 10, 10},
    {6552, 10, 10},
    {6762, 10, 10},
    {6972, 10, 10},
    {7182, 10, 10},
    {7392, 10, 10},
    {7602, 10, 10},
    {7812, 10, 10},
    {8022, 10, 10},
    {8232, 10, 10},
    {8442, 10, 10},
    {8652, 10, 10},
    {8862, 10, 10},
    {9072, 11, 10},
    {9303, 10, 10},
    {9513, 10, 10},
    {9723, 10, 10},
    {9933, 10, 10},
    {10143, 10, 10},
    {10353, 10, 10},
    {10563, 11, 10},
    {10794, 10, 10},
    {11004, 10, 10},
    {11214, 10, 10},
    {11424, 10, 10},
    {11634, 11, 10},
    {11865, 11, 10},
    {12096, 10, 10},
    {12306, 10, 10},
    {12516, 10, 10},
    {12726, 10, 10},
    {12936, 10, 10},
    {13146, 10, 10},
    {13356, 11, 10},
    {13587, 10, 10},
    {13797, 10, 10},
    {14007, 10, 10},
    {14217, 10, 10},
    {14427, 10, 10},
    {14637, 10, 10},
    {14847, 10, 10},
    {15057, 10, 10},
    {15267, 10, 10},
    {15477, 10, 10},
    {15687, 10, 10},
    {15897, 10, 10},
    {16107, 10, 10},
    {16317, 10, 10},
    {16527, 10, 10},
    {16737, 10, 10},
    {16947, 10, 10},
    {17157, 10, 10},
    {17367, 10, 10},
    {17577, 10, 10},
    {17787, 10, 10},
    {17997, 10, 10},
    {18207, 10, 10},
    {18417, 11, 10},
    {18648, 10, 10},
    {18858, 10, 10},
    {19068, 10, 10},
    {19278, 10, 10},
    {19488, 10, 10},
    {19698, 10, 10},
    {19908, 10, 10},
};
constexpr unsigned char k_monospace_20_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,96,0,6,96,0,6,
    96,0,6,96,0,6,96,0,6,96,0,0,0,0,6,96,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,152,129,25,152,129,25,152,1,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,96,6,34,48,3,51,
    254,239,255,16,129,25,152,241,127,255,199,12,204,64,4,68,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,64,0,4,240,129,63,76,194,4,76,128,7,240,1,60,64,6,100,
    68,199,63,248,1,4,64,0,4,0,0,0,0,0,0,0,0,0,28,32,2,35,48,2,
    34,192,97,128,1,6,24,96,56,64,4,196,64,12,68,128,3,0,0,0,0,0,0,0,
    0,0,0,0,0,0,240,129,31,28,192,0,8,128,1,24,192,3,102,44,204,130,101,112,
    14,195,127,120,12,0,0,0,0,0,0,0,0,0,0,0,0,0,96,0,6,96,0,6,
    96,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,128,0,12,64,0,6,96,0,2,48,0,3,48,0,3,48,0,3,
    32,0,6,96,0,4,192,0,8,0,0,0,0,0,0,0,0,0,16,0,3,32,0,6,
    96,0,4,192,0,12,192,0,12,192,0,12,64,0,6,96,0,2,48,0,1,0,0,0,
    0,0,0,0,0,0,96,0,6,100,194,63,240,0,15,248,67,38,96,0,6,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    96,0,6,96,0,6,254,231,127,96,0,6,96,0,6,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    96,0,6,96,0,6,48,0,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,248,129,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    96,0,6,96,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,3,48,128,1,24,
    128,0,12,64,0,6,32,0,3,16,128,1,24,192,0,12,96,0,0,0,0,0,0,0,
    0,0,0,0,0,0,240,128,31,156,195,48,12,99,96,6,102,102,102,102,96,12,195,48,
    156,131,31,240,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,192,15,204,0,12,
    192,0,12,192,0,12,192,0,12,192,0,12,192,128,127,248,7,0,0,0,0,0,0,0,
    0,0,0,0,0,0,248,192,31,132,3,48,0,3,48,0,1,24,192,0,6,48,128,1,
    12,224,63,254,3,0,0,0,0,0,0,0,0,0,0,0,0,0,248,192,31,132,3,48,
    0,3,56,240,1,31,128,3,48,0,2,48,134,227,31,248,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,128,1,28,224,1,26,176,1,25,152,193,24,132,97,24,254,231,127,
    128,1,24,128,1,0,0,0,0,0,0,0,0,0,0,0,0,0,252,193,31,12,192,0,
    12,192,15,252,65,56,0,3,48,0,3,48,134,227,31,248,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,240,129,63,28,194,0,12,96,0,230,225,63,14,227,96,4,198,96,
    12,131,63,240,1,0,0,0,0,0,0,0,0,0,0,0,0,0,254,231,63,0,3,48,
    128,1,24,128,0,12,192,0,6,96,0,6,48,0,3,56,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,240,192,63,12,195,48,12,195,48,248,129,31,12,99,96,6,102,96,
    12,195,63,240,1,0,0,0,0,0,0,0,0,0,0,0,0,0,248,192,31,140,99,48,
    6,99,112,140,199,127,120,6,96,0,3,48,132,195,31,120,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,6,96,0,6,0,0,0,0,0,0,
    96,0,6,96,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,6,96,0,6,0,0,0,0,0,0,96,0,6,96,0,6,48,0,3,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,4,120,224,129,7,14,224,0,120,0,30,
    128,7,64,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,254,231,127,0,0,0,254,231,127,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,2,224,1,120,0,62,0,7,112,224,131,7,
    30,32,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,192,31,140,3,48,
    0,3,56,128,1,12,96,0,6,96,0,6,0,0,6,96,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,30,24,194,64,6,36,124,98,62,195,51,60,195,51,60,195,
    98,46,252,6,192,0,24,0,62,0,0,0,0,0,0,0,0,0,96,0,15,240,0,15,
    152,129,25,152,129,25,12,195,48,252,227,127,6,102,96,6,14,0,0,0,0,0,0,0,
    0,0,0,0,0,0,252,193,63,12,195,96,12,198,48,252,193,31,12,195,96,12,198,96,
    12,199,63,252,1,0,0,0,0,0,0,0,0,0,0,0,0,0,224,129,63,24,194,0,
    12,192,0,6,96,0,6,192,0,12,192,0,24,130,63,224,1,0,0,0,0,0,0,0,
    0,0,0,0,0,0,126,224,31,134,99,48,6,99,96,6,102,96,6,102,96,6,99,48,
    134,227,31,126,0,0,0,0,0,0,0,0,0,0,0,0,0,0,252,199,127,12,192,0,
    12,192,0,252,195,63,12,192,0,12,192,0,12,192,127,252,7,0,0,0,0,0,0,0,
    0,0,0,0,0,0,252,199,127,12,192,0,12,192,0,252,195,63,12,192,0,12,192,0,
    12,192,0,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,129,63,28,194,0,
    6,96,0,6,96,120,134,103,96,6,198,96,28,134,63,240,1,0,0,0,0,0,0,0,
    0,0,0,0,0,0,6,102,96,6,102,96,6,102,96,254,231,127,6,102,96,6,102,96,
    6,102,96,6,6,0,0,0,0,0,0,0,0,0,0,0,0,0,252,195,63,96,0,6,
    96,0,6,96,0,6,96,0,6,96,0,6,96,192,63,252,3,0,0,0,0,0,0,0,
    0,0,0,0,0,0,240,1,31,128,1,24,128,1,24,128,1,24,128,1,24,128,1,24,
    130,225,31,124,0,0,0,0,0,0,0,0,0,0,0,0,0,0,6,102,48,134,97,28,
    230,96,7,62,224,7,238,96,12,134,97,56,6,99,96,6,14,0,0,0,0,0,0,0,
    0,0,0,0,0,0,12,192,0,12,192,0,12,192,0,12,192,0,12,192,0,12,192,0,
    12,192,127,252,7,0,0,0,0,0,0,0,0,0,0,0,0,0,14,231,112,14,231,121,
    150,103,105,246,102,111,102,102,102,6,102,96,6,102,96,6,6,0,0,0,0,0,0,0,
    0,0,0,0,0,0,14,230,96,30,230,97,54,102,99,38,102,102,70,102,108,198,102,120,
    134,103,112,6,7,0,0,0,0,0,0,0,0,0,0,0,0,0,240,128,31,156,195,48,
    6,102,96,6,102,96,6,102,96,6,198,48,28,131,31,240,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,252,193,63,12,199,96,12,198,96,12,199,63,252,193,0,12,192,0,
    12,192,0,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,128,31,156,195,48,
    6,102,96,6,102,96,6,102,96,6,198,48,28,131,31,240,0,24,0,3,16,0,0,0,
    0,0,0,0,0,0,224,15,252,135,225,48,24,6,195,96,248,7,127,96,24,12,134,193,
    48,56,6,198,192,24,48,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,193,63,
    12,98,0,6,192,0,60,128,31,192,3,48,0,6,96,4,195,63,248,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,255,255,255,96,0,6,96,0,6,96,0,6,96,0,6,
    96,0,6,96,0,6,96,0,0,0,0,0,0,0,0,0,0,0,0,0,0,6,102,96,
    6,102,96,6,102,96,6,102,96,6,102,96,6,198,48,12,195,63,240,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,6,102,96,6,70,32,12,195,48,12,131,17,152,129,25,
    144,0,15,240,0,15,96,0,0,0,0,0,0,0,0,0,0,0,0,0,0,48,192,6,
    216,0,19,96,98,196,204,216,27,123,99,105,44,13,165,225,28,156,131,97,48,12,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,6,198,96,12,131,25,144,1,15,224,0,6,
    240,0,27,152,193,48,12,99,96,7,14,0,0,0,0,0,0,0,0,0,0,0,0,0,
    6,102,96,12,195,48,152,129,25,240,0,6,96,0,6,96,0,6,96,0,6,96,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,252,199,127,0,6,48,128,1,24,192,0,6,
    96,0,3,24,128,1,12,192,127,252,7,0,0,0,0,0,0,0,0,0,0,0,0,0,
    224,1,30,32,0,2,32,0,2,32,0,2,32,0,2,32,0,2,32,0,2,32,0,2,
    224,1,30,0,0,0,0,0,0,0,0,0,6,192,0,12,128,1,24,0,1,48,0,2,
    96,0,4,192,0,8,128,1,24,0,3,48,0,0,0,0,0,0,0,0,0,0,0,0,
    248,128,15,192,0,12,192,0,12,192,0,12,192,0,12,192,0,12,192,0,12,192,0,12,
    248,128,15,0,0,0,0,0,0,0,0,0,96,0,15,152,193,48,6,6,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,192,255,251,127,0,0,0,0,128,1,48,0,2,64,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,248,192,63,4,3,48,248,195,63,14,99,48,142,195,63,
    120,2,0,0,0,0,0,0,0,0,0,0,0,0,0,12,192,0,12,192,0,236,193,63,
    28,195,96,12,198,96,12,198,96,28,195,63,236,1,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,224,129,63,24,192,0,12,192,0,12,192,0,24,128,63,
    224,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,3,48,0,3,48,120,195,63,
    140,99,48,6,99,48,6,99,48,140,195,63,112,3,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,240,129,63,12,99,96,254,231,127,6,96,0,28,130,63,
    240,1,0,0,0,0,0,0,0,0,0,0,0,0,0,192,3,62,96,0,6,252,195,63,
    96,0,6,96,0,6,96,0,6,96,0,6,96,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,112,195,63,140,99,48,6,99,48,6,99,48,140,195,63,
    112,3,48,128,195,31,248,0,0,0,0,0,0,0,0,12,192,0,12,192,0,236,193,63,
    28,195,48,12,195,48,12,195,48,12,195,48,12,3,0,0,0,0,0,0,0,0,0,0,
    0,0,0,96,0,6,0,0,0,124,192,7,96,0,6,96,0,6,96,0,6,96,192,127,
    252,7,0,0,0,0,0,0,0,0,0,0,0,0,0,192,0,12,0,0,0,248,128,15,
    192,0,12,192,0,12,192,0,12,192,0,12,192,0,12,96,192,7,60,0,0,0,0,0,
    0,0,0,12,192,0,12,192,0,12,199,56,204,192,6,124,192,15,204,192,24,12,195,112,
    12,6,0,0,0,0,0,0,0,0,0,0,0,0,0,60,192,3,48,0,3,48,0,3,
    48,0,3,48,0,3,48,0,2,96,0,62,192,3,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,190,227,127,102,102,102,102,102,102,102,102,102,102,102,102,
    102,6,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,236,193,63,
    28,195,48,12,195,48,12,195,48,12,195,48,12,3,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,240,128,63,12,195,48,6,102,96,6,198,48,12,131,63,
    240,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,236,193,63,
    28,195,96,12,198,96,12,198,96,28,195,63,236,193,0,12,192,0,12,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,112,195,63,140,195,48,6,99,48,6,195,48,140,195,63,
    112,3,48,0,3,48,0,3,0,0,0,0,0,0,0,0,0,0,0,0,0,144,7,125,
    112,0,3,48,0,1,16,0,1,16,0,1,16,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,240,128,63,12,193,0,24,0,31,128,3,48,4,195,63,
    248,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,3,48,0,3,254,227,63,
    48,0,3,48,0,3,48,0,3,112,0,62,192,3,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,12,195,48,12,195,48,12,195,48,12,195,48,140,131,63,
    120,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,6,70,96,
    12,195,48,8,129,25,152,1,9,240,0,15,96,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,3,108,128,9,16,51,98,102,204,12,189,161,20,156,
    131,115,48,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    6,198,48,152,1,15,240,0,6,240,128,25,152,193,48,6,6,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,6,70,96,12,195,48,24,129,25,144,1,11,
    224,0,6,96,0,6,48,192,3,28,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    252,195,63,0,1,24,192,0,6,48,0,1,8,192,63,252,3,0,0,0,0,0,0,0,
    0,0,0,0,0,0,192,3,60,96,0,6,96,0,6,96,0,6,60,192,3,112,0,6,
    96,0,6,96,0,6,192,3,60,0,0,0,0,0,0,0,0,0,96,0,6,96,0,6,
    96,0,6,96,0,6,96,0,6,96,0,6,96,0,6,96,0,6,96,0,6,96,0,6,
    0,0,0,0,0,0,60,192,3,96,0,6,96,0,6,96,0,6,192,3,60,224,0,6,
    96,0,6,96,0,6,60,192,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,192,67,254,39,60,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
};
constexpr GlyphInfo k_monospace_20_glyphs[] = {
    {0, 12, 12},
    {288, 12, 12},
    {576, 12, 12},
    {864, 12, 12},
    {1152, 12, 12},
    {1440, 12, 12},
    {1728, 12, 12},
    {2016, 12, 12},
    {2304, 12, 12},
    {2592, 12, 12},
    {2880, 12, 12},
    {3168, 12, 12},
    {3456, 12, 12},
    {3744, 12, 12},
    {4032, 12, 12},
    {4320, 12, 12},
    {4608, 12, 12},
    {4896, 12, 12},
    {5184, 12, 12},
    {5472, 12, 12},
    {5760, 12, 12},
    {6048, 12, 12},
    {6336, 12, 12},
    {6624, 12, 12},
    {6912, 12, 12},
    {7200, 12, 12},
    {7488, 12, 12},
    {7776, 12, 12},
    {8064, 12, 12},
    {8352, 12, 12},
    {8640, 12, 12},
    {8928, 12, 12},
    {9216, 12, 12},
    {9504, 12, 12},
    {9792, 12, 12},
    {10080, 12, 12},
    {10368, 12, 12},
    {10656, 12, 12},
    {10944, 12, 12},
    {11232, 12, 12},
    {11520, 12, 12},
    {11808, 12, 12},
    {12096, 12, 12},
    {12384, 12, 12},
    {12672, 12, 12},
    {12960, 12, 12},
    {13248, 12, 12},
    {13536, 12, 12},
    {13824, 12, 12},
    {14112, 12, 12},
    {14400, 13, 12},
    {14712, 12, 12},
    {15000, 12, 12},
    {15288, 12, 12},
    {15576, 12, 12},
    {15864, 13, 12},
    {16176, 12, 12},
    {16464, 12, 12},
    {16752, 12, 12},
    {17040, 12, 12},
    {17328, 12, 12},
    {17616, 12, 12},
    {17904, 12, 12},
    {18192, 13, 12},
    {18504, 12, 12},
    {18792, 12, 12},
    {19080, 12, 12},
    {19368, 12, 12},
    {19656, 12, 12},
    {19944, 12, 12},
    {20232, 12, 12},
    {20520, 12, 12},
    {20808, 12, 12},
    {21096, 12, 12},
    {21384, 12, 12},
    {21672, 12, 12},
    {21960, 12, 12},
    {22248, 12, 12},
    {22536, 12, 12},
    {22824, 12, 12},
    {23112, 12, 12},
    {23400, 12, 12},
    {23688, 12, 12},
    {23976, 12, 12},
    {24264, 12, 12},
    {24552, 12, 12},
    {24840, 12, 12},
    {25128, 13, 12},
    {25440, 12, 12},
    {25728, 12, 12},
    {26016, 12, 12},
    {26304, 12, 12},
    {26592, 12, 12},
    {26880, 12, 12},
    {27168, 12, 12},
};
constexpr unsigned char k_serif_10_bits[] = {
    0,0,0,0,0,0,48,3,0,0,0,0,0,40,165,0,0,0,0,0,0,0,128,128,
    226,143,226,71,65,1,0,0,0,0,0,224,9,28,38,113,0,0,0,0,0,0,70,40,
    160,130,53,64,33,69,12,0,0,0,0,0,0,0,14,36,8,40,147,32,134,27,0,0,
    0,0,72,2,0,0,0,0,34,34,2,0,0,0,64,68,68,0,0,0,0,66,8,33,
    0,0,0,0,0,0,32,32,32,252,32,32,32,0,0,0,0,0,0,32,0,0,0,224,
    0,0,0,0,0,8,0,0,16,145,136,68,0,0,0,192,73,162,40,74,28,0,0,0,
    0,48,8,130,32,136,7,0,0,0,0,158,4,1,0,224,1,0,0,0,0,39,65,12,
    36,123,0,0,0,0,128,32,8,242,35,60,0,0,0,0,120,130,7,129,18,7,0,0,
    0,0,156,228,201,162,204,1,0,0,0,128,15,64,0,2,16,0,0,0,0,192,73,18,
    39,201,30,0,0,0,0,112,146,44,243,18,3,0,0,0,0,2,4,0,0,0,1,2,
    0,0,0,0,0,132,97,128,1,4,0,0,0,0,0,0,0,0,224,7,224,7,0,0,
    0,0,0,0,0,0,96,128,1,134,97,0,0,0,0,0,0,112,16,51,2,8,0,0,
    0,0,0,192,131,16,185,148,80,66,41,121,8,192,3,0,0,0,0,4,12,10,24,31,
    144,49,0,0,0,0,0,224,19,137,124,98,177,15,0,0,0,0,0,240,24,9,8,8,
    24,241,0,0,0,0,0,0,248,136,9,9,9,137,249,0,0,0,0,0,0,159,64,224,
    17,8,253,0,0,0,0,0,248,133,2,159,64,224,0,0,0,0,0,0,60,70,2,2,
    98,70,60,0,0,0,0,0,0,48,39,68,136,31,33,66,204,1,0,0,0,0,76,68,
    68,12,0,0,224,137,136,136,100,0,0,0,192,76,68,192,65,67,198,28,0,0,0,0,
    0,24,4,2,129,64,224,3,0,0,0,0,0,192,225,134,41,165,149,76,2,25,14,0,
    0,0,0,0,0,224,152,3,5,18,68,136,57,2,0,0,0,0,0,0,30,35,33,97,
    97,35,30,0,0,0,0,0,224,19,137,124,2,129,3,0,0,0,0,0,240,24,9,9,
    11,25,241,64,128,1,0,0,0,248,136,136,120,136,136,57,3,0,0,0,0,0,142,72,
    192,1,137,56,0,0,0,0,0,252,147,8,4,2,193,1,0,0,0,0,0,199,66,66,
    66,66,68,60,0,0,0,0,0,0,103,2,34,36,4,24,8,0,0,0,0,0,0,0,
    78,38,2,25,80,133,8,204,64,4,0,0,0,0,0,0,128,59,3,10,4,10,145,57,
    0,0,0,0,0,112,22,81,16,8,4,7,0,0,0,0,0,31,0,130,32,8,253,0,
    0,0,192,68,68,68,196,0,0,32,66,68,136,8,0,192,136,136,136,200,0,0,0,0,
    48,88,128,0,0,0,0,0,0,0,0,0,0,0,0,0,0,31,0,32,8,0,0,0,
    0,0,0,0,0,0,24,200,147,124,0,0,0,96,16,4,77,22,229,13,0,0,0,0,
    0,128,145,4,129,3,0,0,0,192,64,32,30,137,68,226,3,0,0,0,0,0,128,35,
    121,2,7,0,0,0,76,136,39,132,56,0,0,0,0,0,0,248,36,18,137,7,194,0,
    0,0,3,129,64,35,145,72,110,0,0,0,128,48,73,7,0,64,152,36,105,0,0,6,
    2,129,78,224,144,220,0,0,0,48,73,146,14,0,0,0,0,0,0,128,109,36,145,68,
    146,219,0,0,0,0,0,0,0,0,108,36,18,201,13,0,0,0,0,0,0,156,36,73,
    28,0,0,0,0,0,192,38,139,178,38,28,0,0,0,0,0,124,18,137,196,3,193,1,
    0,0,0,124,33,196,1,0,0,0,0,112,194,97,7,0,0,0,145,23,81,3,0,0,
    0,0,0,76,36,18,9,15,0,0,0,0,0,0,179,36,48,4,0,0,0,0,0,0,
    0,224,146,36,21,108,200,0,0,0,0,0,0,0,216,4,2,217,1,0,0,0,0,0,
    102,73,96,8,98,0,0,0,0,120,68,160,7,0,0,0,134,32,136,129,32,8,6,0,
    128,36,73,146,4,0,48,16,4,193,16,4,49,0,0,0,0,0,0,0,128,1,14,0,
    0,0,0,0,
};
constexpr GlyphInfo k_serif_10_glyphs[] = {
    {0, 3, 3},
    {39, 4, 4},
    {91, 5, 5},
    {156, 8, 8},
    {260, 6, 6},
    {338, 10, 10},
    {468, 9, 9},
    {585, 3, 3},
    {624, 4, 4},
    {676, 4, 4},
    {728, 5, 5},
    {793, 8, 8},
    {897, 3, 3},
    {936, 3, 3},
    {975, 3, 3},
    {1014, 4, 3},
    {1066, 6, 6},
    {1144, 6, 6},
    {1222, 6, 6},
    {1300, 6, 6},
    {1378, 6, 6},
    {1456, 6, 6},
    {1534, 6, 6},
    {1612, 6, 6},
    {1690, 6, 6},
    {1768, 6, 6},
    {1846, 3, 3},
    {1885, 3, 3},
    {1924, 8, 8},
    {2028, 8, 8},
    {2132, 8, 8},
    {2236, 5, 5},
    {2301, 10, 10},
    {2431, 8, 7},
    {2535, 7, 7},
    {2626, 8, 8},
    {2730, 8, 8},
    {2834, 7, 7},
    {2925, 7, 7},
    {3016, 8, 8},
    {3120, 9, 9},
    {3237, 4, 4},
    {3289, 4, 4},
    {3341, 8, 7},
    {3445, 7, 7},
    {3536, 10, 10},
    {3666, 9, 9},
    {3783, 8, 8},
    {3887, 7, 7},
    {3978, 8, 8},
    {4082, 8, 8},
    {4186, 7, 7},
    {4277, 7, 7},
    {4368, 8, 8},
    {4472, 8, 7},
    {4576, 11, 10},
    {4719, 8, 7},
    {4823, 7, 7},
    {4914, 7, 7},
    {5005, 4, 4},
    {5057, 4, 3},
    {5109, 4, 4},
    {5161, 8, 8},
    {5265, 5, 5},
    {5330, 5, 5},
    {5395, 6, 6},
    {5473, 6, 6},
    {5551, 6, 6},
    {5629, 7, 6},
    {5720, 6, 6},
    {5798, 5, 4},
    {5863, 7, 6},
    {5954, 7, 6},
    {6045, 3, 3},
    {6084, 3, 3},
    {6123, 7, 6},
    {6214, 3, 3},
    {6253, 10, 9},
    {6383, 7, 6},
    {6474, 6, 6},
    {6552, 6, 6},
    {6630, 7, 6},
    {6721, 5, 5},
    {6786, 5, 5},
    {6851, 4, 4},
    {6903, 7, 6},
    {6994, 6, 6},
    {7072, 9, 9},
    {7189, 6, 6},
    {7267, 6, 6},
    {7345, 5, 5},
    {7410, 6, 6},
    {7488, 3, 3},
    {7527, 6, 6},
    {7605, 8, 8},
};
constexpr unsigned char k_serif_12_bits[] = {
    0,0,0,0,0,0,0,0,0,32,132,16,66,0,33,0,0,0,0,20,69,1,0,0,
    0,0,0,0,0,0,0,0,72,160,224,15,9,36,144,240,7,5,18,0,0,0,0,0,
    0,4,4,14,23,5,6,28,53,21,30,4,0,0,0,0,0,0,14,209,132,20,180,224,
    50,80,67,18,209,8,3,0,0,0,0,0,0,0,0,7,68,32,0,3,40,39,18,97,
    24,131,119,0,0,0,0,0,72,2,0,0,0,0,136,16,33,132,16,132,32,0,0,16,
    132,16,134,24,33,68,0,0,0,0,32,49,18,0,0,0,0,0,0,0,0,0,0,0,
    0,32,128,0,130,127,32,128,0,2,0,0,0,0,0,0,0,0,0,38,2,0,0,0,
    0,14,0,0,0,0,0,0,0,96,6,0,0,0,132,8,33,66,136,16,0,0,0,0,
    224,48,17,19,18,18,18,51,225,0,0,0,0,0,0,64,64,64,64,64,64,64,64,224,
    1,0,0,0,0,0,224,16,1,1,129,128,64,32,240,1,0,0,0,0,0,224,16,1,
    1,193,0,1,19,227,1,0,0,0,0,0,128,192,160,128,128,248,131,128,192,3,0,0,
    0,0,0,240,17,16,240,16,1,3,19,225,0,0,0,0,0,0,192,33,17,208,49,19,
    18,50,225,1,0,0,0,0,0,240,19,0,1,129,128,64,64,64,0,0,0,0,0,0,
    224,49,17,51,225,48,17,50,227,1,0,0,0,0,0,224,48,17,19,51,227,3,17,225,
    0,0,0,0,0,0,0,51,48,3,0,0,0,0,48,3,48,17,0,0,0,0,0,0,
    0,48,56,24,96,0,14,192,0,0,0,0,0,0,0,0,0,0,0,0,0,0,255,0,
    240,15,0,0,0,0,0,0,0,0,0,0,0,0,12,192,1,24,96,112,48,0,0,0,
    0,0,0,0,0,78,22,97,12,0,8,2,0,0,0,0,0,0,0,0,120,96,24,2,
    146,47,201,144,40,201,146,15,2,96,8,120,0,0,0,0,4,12,56,72,144,33,227,71,
    216,112,0,0,0,0,0,0,192,15,17,98,68,248,16,35,68,204,15,0,0,0,0,0,
    0,128,135,144,0,1,2,4,8,32,132,7,0,0,0,0,0,0,128,31,196,16,70,24,
    65,132,17,70,140,31,0,0,0,0,0,0,0,252,17,34,64,132,15,17,2,132,252,1,
    0,0,0,0,0,192,159,144,128,136,143,136,128,192,1,0,0,0,0,0,0,192,131,16,
    1,4,16,64,56,193,8,195,3,0,0,0,0,0,0,0,156,39,140,48,194,248,35,140,
    48,194,156,7,0,0,0,0,0,142,16,66,8,33,14,0,0,0,112,132,16,66,8,33,
    132,12,0,0,0,192,57,34,72,160,128,1,10,200,32,198,49,0,0,0,0,0,0,192,
    129,128,128,128,128,128,128,208,31,0,0,0,0,0,0,0,12,156,193,24,142,195,40,141,
    196,200,140,192,28,30,0,0,0,0,0,0,0,0,24,142,33,28,129,9,72,192,2,28,
    192,56,4,0,0,0,0,0,0,0,128,7,33,130,9,36,144,64,130,17,130,7,0,0,
    0,0,0,0,224,71,68,76,196,71,64,64,224,0,0,0,0,0,0,0,224,65,136,96,
    2,9,36,144,96,132,224,1,2,48,0,0,0,0,0,126,16,67,12,17,60,144,65,4,
    33,142,1,0,0,0,0,0,0,60,70,2,6,60,96,64,66,60,0,0,0,0,0,0,
    255,153,24,24,24,24,24,24,60,0,0,0,0,0,0,128,227,4,16,64,0,1,4,16,
    192,8,30,0,0,0,0,0,0,0,142,11,50,64,132,8,3,20,24,32,0,0,0,0,
    0,0,0,0,112,196,132,128,57,33,37,132,128,18,112,14,140,129,16,0,0,0,0,0,
    0,0,0,120,103,132,5,6,12,56,72,8,57,7,0,0,0,0,0,0,156,19,66,130,
    5,6,12,24,48,240,0,0,0,0,0,0,128,63,16,8,4,6,2,129,161,63,0,0,
    0,0,78,8,33,132,16,66,56,0,0,0,33,8,33,8,33,8,1,0,128,67,8,33,
    132,16,66,14,0,0,0,0,0,6,36,8,1,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,126,0,48,8,0,0,0,0,0,0,0,0,0,0,
    0,0,192,145,129,124,34,153,31,0,0,0,0,12,8,8,248,152,25,9,25,153,253,0,
    0,0,0,0,0,0,128,99,18,8,4,38,14,0,0,0,0,128,1,1,225,17,17,17,
    17,17,225,3,0,0,0,0,0,0,0,71,36,242,9,68,28,0,0,0,0,28,97,60,
    134,97,24,198,3,0,0,0,0,0,0,0,159,136,136,136,136,8,15,136,8,7,0,192,
    129,129,129,143,137,137,137,137,201,29,0,0,0,0,8,156,153,153,61,0,0,128,192,153,
    153,153,153,13,0,192,128,128,128,156,128,130,135,132,200,29,0,0,0,192,136,136,136,136,
    28,0,0,0,0,0,0,0,0,192,111,152,137,137,152,136,137,152,200,221,1,0,0,0,
    0,0,0,0,0,192,143,137,137,137,137,201,29,0,0,0,0,0,0,0,56,38,145,88,
    100,226,0,0,0,0,0,0,0,128,31,51,35,33,35,51,31,1,129,3,0,0,0,0,
    0,62,17,17,17,17,17,30,16,16,56,0,0,0,224,55,13,195,48,30,0,0,0,0,
    0,0,71,18,56,72,242,0,0,0,0,8,241,132,16,194,50,0,0,0,0,0,0,192,
    140,136,136,136,136,9,27,0,0,0,0,0,0,0,238,34,1,133,194,64,0,0,0,0,
    0,0,0,0,0,192,201,68,32,19,170,16,129,25,136,0,0,0,0,0,0,0,0,128,
    155,133,129,224,72,238,0,0,0,0,0,0,0,119,145,136,66,97,32,16,128,3,0,0,
    0,224,67,8,66,136,62,0,0,0,0,48,24,8,8,8,14,8,8,8,8,48,0,0,
    0,64,68,68,68,68,68,4,0,192,128,128,128,128,1,131,129,128,128,192,0,0,0,0,
    0,0,0,0,0,0,0,112,4,14,0,0,0,0,0,0,0,0,
};
constexpr GlyphInfo k_serif_12_glyphs[] = {
    {0, 4, 4},
    {60, 5, 5},
    {135, 6, 6},
    {225, 10, 10},
    {375, 8, 8},
    {495, 11, 11},
    {660, 11, 11},
    {825, 3, 3},
    {870, 5, 5},
    {945, 5, 5},
    {1020, 6, 6},
    {1110, 10, 10},
    {1260, 4, 4},
    {1320, 4, 4},
    {1380, 4, 4},
    {1440, 5, 4},
    {1515, 8, 8},
    {1635, 8, 8},
    {1755, 8, 8},
    {1875, 8, 8},
    {1995, 8, 8},
    {2115, 8, 8},
    {2235, 8, 8},
    {2355, 8, 8},
    {2475, 8, 8},
    {2595, 8, 8},
    {2715, 4, 4},
    {2775, 4, 4},
    {2835, 10, 10},
    {2985, 10, 10},
    {3135, 10, 10},
    {3285, 6, 6},
    {3375, 12, 12},
    {3555, 9, 9},
    {3690, 9, 9},
    {3825, 9, 9},
    {3960, 10, 10},
    {4110, 9, 9},
    {4245, 8, 8},
    {4365, 10, 10},
    {4515, 10, 10},
    {4665, 5, 5},
    {4740, 5, 5},
    {4815, 10, 9},
    {4965, 8, 8},
    {5085, 12, 12},
    {5265, 11, 10},
    {5430, 10, 10},
    {5580, 8, 8},
    {5700, 10, 10},
    {5850, 10, 9},
    {6000, 8, 8},
    {6120, 8, 8},
    {6240, 10, 10},
    {6390, 9, 9},
    {6525, 13, 12},
    {6720, 9, 9},
    {6855, 9, 8},
    {6990, 8, 8},
    {7110, 5, 5},
    {7185, 5, 4},
    {7260, 5, 5},
    {7335, 10, 10},
    {7485, 6, 6},
    {7575, 6, 6},
    {7665, 7, 7},
    {7770, 8, 8},
    {7890, 7, 7},
    {7995, 8, 8},
    {8115, 7, 7},
    {8220, 6, 4},
    {8310, 8, 8},
    {8430, 8, 8},
    {8550, 4, 4},
    {8610, 4, 4},
    {8670, 8, 7},
    {8790, 4, 4},
    {8850, 12, 11},
    {9030, 8, 8},
    {9150, 7, 7},
    {9255, 8, 8},
    {9375, 8, 8},
    {9495, 6, 6},
    {9585, 6, 6},
    {9675, 5, 5},
    {9750, 8, 8},
    {9870, 7, 7},
    {9975, 11, 10},
    {10140, 7, 7},
    {10245, 7, 7},
    {10350, 6, 6},
    {10440, 8, 8},
    {10560, 4, 4},
    {10620, 8, 8},
    {10740, 10, 10},
};
constexpr unsigned char k_serif_14_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,195,16,4,65,16,0,195,0,0,0,0,0,32,
    73,146,4,0,0,0,0,0,0,0,0,0,0,0,0,18,32,1,19,252,7,9,144,224,
    63,72,128,4,72,0,0,0,0,0,0,0,0,0,4,8,60,172,88,161,128,3,138,52,
    43,60,32,64,0,0,0,0,0,0,0,192,32,36,130,68,144,4,82,134,41,129,36,144,
    4,145,16,28,0,0,0,0,0,0,0,0,0,0,0,30,32,3,34,96,0,205,155,137,
    176,24,134,227,224,57,0,0,0,0,0,0,0,136,136,0,0,0,0,0,0,0,16,33,
    198,24,99,8,65,0,0,0,4,97,8,33,132,16,98,68,0,0,0,0,16,107,14,103,
    141,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,16,0,1,16,240,31,16,0,
    1,16,0,1,0,0,0,0,0,0,0,0,0,0,0,32,19,0,0,0,0,0,0,0,
    14,0,0,0,0,0,0,0,0,0,96,6,0,0,0,192,8,33,66,136,16,98,4,0,
    0,0,0,128,131,136,49,97,130,4,9,51,70,4,7,0,0,0,0,0,0,0,0,2,
    7,8,16,32,64,128,0,1,2,31,0,0,0,0,0,0,0,0,15,51,66,128,0,1,
    1,1,1,33,127,0,0,0,0,0,0,0,0,30,70,132,128,193,1,4,152,48,35,60,
    0,0,0,0,0,0,0,0,32,96,160,32,65,66,196,63,16,32,240,1,0,0,0,0,
    0,0,0,248,0,0,192,131,8,48,96,194,140,240,0,0,0,0,0,0,0,0,224,33,
    102,200,135,17,99,134,140,17,193,1,0,0,0,0,0,0,0,240,39,12,8,16,16,32,
    32,64,128,128,0,0,0,0,0,0,0,0,192,131,136,49,34,56,136,8,19,102,140,15,
    0,0,0,0,0,0,0,0,135,17,97,194,132,25,227,39,196,12,15,0,0,0,0,0,
    0,0,0,0,33,0,16,2,0,0,0,0,0,0,32,4,0,98,4,0,0,0,0,0,
    0,0,0,0,0,4,120,224,128,1,24,0,14,128,7,64,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,252,7,0,0,192,127,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,8,128,3,192,1,112,0,7,28,56,128,0,0,0,0,0,0,
    0,0,0,0,56,68,196,192,96,48,16,0,16,16,0,0,0,0,0,0,0,0,0,0,
    31,48,8,6,196,92,146,153,36,36,9,73,102,49,55,8,0,12,0,60,0,0,0,0,
    0,0,0,0,48,128,1,26,208,0,4,98,240,67,48,130,57,28,0,0,0,0,0,0,
    0,0,0,254,16,70,24,97,252,16,70,16,65,132,249,3,0,0,0,0,0,0,0,0,
    0,31,12,51,144,1,4,32,0,3,24,140,49,248,0,0,0,0,0,0,0,0,0,0,
    254,32,12,193,8,68,32,2,17,136,96,132,241,7,0,0,0,0,0,0,0,0,0,254,
    17,68,0,33,252,16,66,0,1,4,249,7,0,0,0,0,0,0,0,0,248,71,16,1,
    132,240,67,8,1,4,16,224,1,0,0,0,0,0,0,0,0,0,124,48,204,64,6,16,
    128,224,12,100,32,134,225,7,0,0,0,0,0,0,0,0,0,192,243,8,132,64,8,132,
    127,8,132,64,8,132,64,60,15,0,0,0,0,0,0,0,0,143,32,8,130,32,8,194,
    3,0,0,0,0,192,99,24,134,97,24,134,97,24,98,0,0,0,0,0,120,142,16,68,
    32,1,7,120,64,6,98,16,198,227,0,0,0,0,0,0,0,0,0,15,4,8,16,32,
    64,128,0,65,130,254,1,0,0,0,0,0,0,0,0,0,7,156,129,225,96,40,20,26,
    132,36,33,71,136,17,2,196,129,7,0,0,0,0,0,0,0,0,0,0,0,135,231,16,
    14,161,17,50,33,22,66,33,28,130,113,16,0,0,0,0,0,0,0,0,0,0,248,96,
    136,129,12,44,96,1,27,200,64,12,193,7,0,0,0,0,0,0,0,0,192,15,33,194,
    132,9,241,33,64,128,128,7,0,0,0,0,0,0,0,0,128,15,134,24,200,192,2,22,
    176,129,12,196,16,124,0,1,48,0,0,0,0,0,0,0,127,16,134,48,132,33,12,31,
    136,65,24,130,120,28,0,0,0,0,0,0,0,0,0,60,140,49,196,0,14,224,1,68,
    48,67,248,0,0,0,0,0,0,0,0,0,254,139,40,34,8,32,128,0,2,8,32,192,
    3,0,0,0,0,0,0,0,0,0,60,142,64,8,132,64,8,132,64,8,132,65,24,2,
    30,0,0,0,0,0,0,0,0,0,0,60,206,32,6,33,4,35,16,129,5,44,192,0,
    6,0,0,0,0,0,0,0,0,0,0,0,30,113,134,17,226,8,81,132,41,192,178,64,
    81,224,24,48,12,16,6,0,0,0,0,0,0,0,0,0,0,0,158,35,132,9,12,96,
    128,1,13,98,8,57,30,0,0,0,0,0,0,0,0,120,206,16,2,152,192,1,2,8,
    32,128,0,15,0,0,0,0,0,0,0,0,192,63,65,132,0,3,6,8,16,96,192,32,
    255,0,0,0,0,0,0,112,198,24,99,140,49,198,56,0,0,0,32,12,33,4,33,4,
    33,132,1,0,192,33,132,16,66,8,33,228,0,0,0,0,0,0,0,6,240,128,24,4,
    2,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,224,15,0,0,8,4,4,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,240,136,0,241,25,9,153,241,3,0,0,0,0,0,112,128,0,1,58,204,8,17,
    34,68,136,217,29,0,0,0,0,0,0,0,0,0,224,49,18,16,16,16,48,226,1,0,
    0,0,0,0,0,12,16,32,92,204,8,17,34,68,136,25,238,0,0,0,0,0,0,0,
    0,0,192,99,38,228,47,32,96,196,3,0,0,0,0,0,240,8,132,15,129,64,32,16,
    8,31,0,0,0,0,0,0,0,0,0,220,205,8,17,34,68,136,25,46,64,196,240,0,
    0,0,192,1,2,4,232,48,33,66,140,24,49,98,238,1,0,0,0,0,0,66,192,33,
    132,16,66,30,0,0,0,16,129,17,17,17,17,217,0,0,0,7,8,16,32,71,130,2,
    7,26,36,136,188,7,0,0,0,0,0,14,33,132,16,66,8,121,0,0,0,0,0,0,
    0,0,0,0,224,230,48,51,34,70,196,136,24,17,35,98,238,30,0,0,0,0,0,0,
    0,0,0,0,0,192,29,38,68,136,17,35,70,204,61,0,0,0,0,0,0,0,0,0,
    240,152,9,9,11,11,153,241,0,0,0,0,0,0,0,0,0,128,59,204,8,17,34,68,
    136,25,29,2,4,30,0,0,0,0,0,0,0,220,205,8,17,34,68,136,25,46,64,128,
    128,7,0,0,0,0,128,59,147,64,32,16,8,14,0,0,0,0,0,0,0,0,71,36,
    112,224,64,34,14,0,0,0,0,0,64,16,31,65,16,4,65,113,0,0,0,0,0,0,
    0,0,224,12,17,34,68,136,16,33,195,29,0,0,0,0,0,0,0,0,0,206,133,12,
    72,72,24,48,48,0,0,0,0,0,0,0,0,0,0,0,224,201,197,136,140,200,133,80,
    56,7,51,16,2,0,0,0,0,0,0,0,0,0,0,224,204,132,1,3,131,6,228,30,
    0,0,0,0,0,0,0,0,224,92,200,136,132,132,1,3,3,1,225,0,0,0,0,0,
    0,126,17,4,131,32,24,253,0,0,0,0,0,0,24,8,16,32,64,192,192,0,3,4,
    8,16,32,128,1,0,0,0,66,8,33,132,16,66,8,33,4,0,0,192,0,2,4,8,
    16,32,128,129,0,1,2,4,8,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    224,17,224,0,0,0,0,0,0,0,0,0,0,0,
};
constexpr GlyphInfo k_serif_14_glyphs[] = {
    {0, 4, 4},
    {68, 6, 6},
    {170, 6, 6},
    {272, 12, 12},
    {476, 9, 9},
    {629, 13, 13},
    {850, 12, 12},
    {1054, 4, 4},
    {1122, 5, 5},
    {1207, 5, 5},
    {1292, 7, 7},
    {1411, 12, 12},
    {1615, 4, 4},
    {1683, 5, 5},
    {1768, 4, 4},
    {1836, 5, 5},
    {1921, 9, 9},
    {2074, 9, 9},
    {2227, 9, 9},
    {2380, 9, 9},
    {2533, 9, 9},
    {2686, 9, 9},
    {2839, 9, 9},
    {2992, 9, 9},
    {3145, 9, 9},
    {3298, 9, 9},
    {3451, 5, 5},
    {3536, 5, 5},
    {3621, 12, 12},
    {3825, 12, 12},
    {4029, 12, 12},
    {4233, 8, 8},
    {4369, 14, 14},
    {4607, 11, 10},
    {4794, 10, 10},
    {4964, 11, 11},
    {5151, 11, 11},
    {5338, 10, 10},
    {5508, 10, 10},
    {5678, 11, 11},
    {5865, 12, 12},
    {6069, 6, 6},
    {6171, 6, 6},
    {6273, 11, 10},
    {6460, 9, 9},
    {6613, 14, 14},
    {6851, 12, 12},
    {7055, 11, 11},
    {7242, 9, 9},
    {7395, 11, 11},
    {7582, 11, 11},
    {7769, 10, 10},
    {7939, 10, 9},
    {8109, 12, 12},
    {8313, 11, 10},
    {8500, 15, 14},
    {8755, 10, 10},
    {8925, 10, 9},
    {9095, 10, 10},
    {9265, 5, 5},
    {9350, 5, 5},
    {9435, 5, 5},
    {9520, 12, 12},
    {9724, 7, 7},
    {9843, 7, 7},
    {9962, 8, 8},
    {10098, 9, 9},
    {10251, 8, 8},
    {10387, 9, 9},
    {10540, 8, 8},
    {10676, 7, 5},
    {10795, 9, 9},
    {10948, 9, 9},
    {11101, 5, 4},
    {11186, 4, 4},
    {11254, 9, 8},
    {11407, 5, 4},
    {11492, 13, 13},
    {11713, 9, 9},
    {11866, 8, 8},
    {12002, 9, 9},
    {12155, 9, 9},
    {12308, 7, 7},
    {12427, 7, 7},
    {12546, 6, 6},
    {12648, 9, 9},
    {12801, 8, 8},
    {12937, 12, 12},
    {13141, 8, 8},
    {13277, 8, 8},
    {13413, 7, 7},
    {13532, 9, 9},
    {13685, 5, 5},
    {13770, 9, 9},
    {13923, 12, 12},
};
constexpr unsigned char k_serif_17_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,193,64,32,16,8,4,2,
    0,64,32,0,0,0,0,0,0,0,0,64,66,66,66,66,2,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,68,0,17,64,6,152,192,255,129,12,48,131,
    255,3,17,64,6,152,1,38,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,8,
    240,193,26,146,144,128,7,248,0,15,104,68,98,26,124,128,0,4,0,0,0,0,0,0,
    0,0,0,0,0,0,56,16,76,24,196,8,196,4,196,6,76,114,56,201,128,137,128,136,
    64,136,64,200,32,112,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    30,128,17,192,8,96,0,96,0,104,60,98,132,97,194,224,97,96,96,120,224,227,0,0,
    0,0,0,0,0,0,0,0,0,0,132,16,66,0,0,0,0,0,0,0,0,0,0,0,
    48,8,6,129,96,48,24,12,4,2,3,129,1,0,0,0,0,64,64,64,32,48,24,8,
    4,2,193,96,16,8,130,0,0,0,0,0,0,0,8,146,172,225,192,97,77,18,4,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,48,0,12,0,3,192,
    0,48,192,255,0,3,192,0,48,0,12,0,3,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,192,136,17,0,0,0,0,0,0,0,0,0,0,60,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,96,12,0,0,0,0,0,0,12,65,24,130,48,
    4,97,8,194,16,0,0,0,0,0,0,0,0,120,96,4,97,12,98,48,131,25,204,96,
    6,33,12,35,240,0,0,0,0,0,0,0,0,0,0,0,0,0,24,224,128,4,32,0,
    1,8,64,0,2,16,128,0,4,252,0,0,0,0,0,0,0,0,0,0,0,0,0,31,
    140,35,24,192,0,2,24,32,128,0,66,8,194,31,255,0,0,0,0,0,0,0,0,0,
    0,0,0,0,15,132,33,12,96,128,1,7,192,0,4,96,2,49,12,62,0,0,0,0,
    0,0,0,0,0,0,0,0,0,12,112,64,3,26,200,32,6,49,132,225,63,96,0,3,
    126,0,0,0,0,0,0,0,0,0,0,0,0,224,15,127,8,64,0,62,16,6,48,0,
    1,136,97,12,131,7,0,0,0,0,0,0,0,0,0,0,0,0,192,3,49,4,33,128,
    61,28,99,48,131,25,140,32,140,193,7,0,0,0,0,0,0,0,0,0,0,0,0,252,
    231,31,129,0,2,16,128,0,2,16,64,0,2,8,64,0,0,0,0,0,0,0,0,0,
    0,0,0,0,248,96,12,97,8,195,24,124,48,198,32,6,51,24,99,240,1,0,0,0,
    0,0,0,0,0,0,0,0,0,60,48,198,48,6,49,152,225,24,135,23,128,16,134,24,
    120,0,0,0,0,0,0,0,0,0,0,0,0,0,0,12,3,0,0,195,0,0,0,0,
    0,0,0,0,0,0,0,195,0,0,192,16,134,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,32,0,15,120,128,7,112,0,120,0,120,0,240,0,32,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,63,0,0,
    0,192,255,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,1,192,3,128,7,0,15,0,3,240,128,7,60,0,1,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,192,199,152,48,96,192,192,192,128,0,1,0,6,12,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,31,192,64,192,0,193,0,132,112,
    129,17,35,51,68,102,136,204,144,24,177,33,220,192,0,0,3,0,12,6,224,3,0,0,
    0,0,0,0,0,0,0,0,0,24,0,3,240,0,26,64,6,196,128,24,24,6,255,32,
    48,2,230,224,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,255,128,48,16,12,
    130,65,24,248,1,193,32,24,4,130,96,16,140,255,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,240,3,195,49,48,3,100,0,12,128,1,48,0,6,140,129,96,24,248,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,63,64,56,16,24,4,6,1,
    65,192,16,48,4,4,129,65,96,16,14,255,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,240,63,4,66,32,132,64,8,252,64,8,132,64,0,4,66,32,255,3,0,0,
    0,0,0,0,0,0,0,0,0,0,0,255,67,32,4,66,8,132,192,15,132,64,8,4,
    64,0,4,240,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,31,48,28,6,
    198,0,49,0,12,0,131,199,0,49,64,24,16,12,6,126,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,192,199,135,128,64,64,32,32,16,16,248,15,4,4,2,2,
    1,129,128,64,64,248,248,0,0,0,0,0,0,0,0,0,0,0,0,0,62,4,2,129,
    64,32,16,8,4,194,7,0,0,0,0,0,0,0,240,33,16,8,4,2,129,64,32,16,
    8,4,130,113,0,0,0,0,0,0,0,128,207,67,16,8,1,17,160,1,28,128,7,208,
    1,114,64,24,8,198,135,3,0,0,0,0,0,0,0,0,0,0,0,0,0,31,32,0,
    1,8,64,0,2,16,128,0,4,32,16,129,254,7,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,128,7,120,12,56,56,112,112,208,160,161,65,35,131,76,6,89,12,226,24,
    196,48,8,96,60,224,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    112,224,113,32,120,16,108,8,118,4,51,130,49,193,176,96,112,48,56,24,24,30,8,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,15,24,6,3,99,128,25,96,
    6,152,1,102,128,25,32,12,12,134,1,63,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,224,31,132,33,24,193,8,70,24,126,16,128,0,4,32,192,7,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,248,1,195,96,96,12,48,3,204,0,51,192,12,48,3,
    140,129,193,48,224,3,192,0,224,0,48,0,0,0,0,0,0,0,0,0,0,192,63,64,
    24,16,12,4,3,193,64,24,240,3,132,1,97,64,48,16,12,31,14,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,192,7,134,33,24,3,97,0,28,0,15,128,33,16,2,
    97,24,252,0,0,0,0,0,0,0,0,0,0,0,0,0,128,255,11,163,48,2,3,48,
    0,3,48,0,3,48,0,3,48,192,7,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,240,241,25,16,6,132,1,97,64,24,16,6,132,1,97,64,16,16,12,2,126,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,224,193,27,16,6,194,32,24,4,198,192,
    8,48,1,22,192,3,48,0,6,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,124,12,103,48,8,195,33,140,6,48,26,129,72,4,38,19,88,44,64,161,0,135,
    3,12,6,48,24,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,159,
    135,65,96,4,76,0,15,192,0,24,128,6,136,1,97,16,140,199,7,0,0,0,0,0,
    0,0,0,0,0,0,0,0,224,225,12,132,33,48,2,19,224,0,12,64,0,4,64,0,
    4,240,1,0,0,0,0,0,0,0,0,0,0,0,0,0,252,79,96,4,3,48,128,1,
    12,96,0,6,48,128,129,12,200,255,0,0,0,0,0,0,0,0,0,0,120,12,6,131,
    193,96,48,24,12,6,131,193,224,1,0,0,0,0,0,193,32,8,6,65,48,8,130,65,
    16,12,0,0,0,0,240,64,32,16,8,4,2,129,64,32,16,8,196,3,0,0,0,0,
    0,0,0,0,0,128,1,240,0,102,192,48,24,16,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,252,7,0,0,0,1,4,16,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,60,136,1,4,16,
    126,12,49,196,24,222,1,0,0,0,0,0,0,0,0,0,112,0,2,16,128,0,228,96,
    12,195,24,70,48,134,49,140,49,247,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,120,48,98,136,1,6,24,96,24,35,120,0,0,0,0,0,0,0,0,0,0,0,
    56,128,1,12,96,112,195,28,195,24,198,48,134,49,12,115,112,7,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,240,96,198,48,195,252,51,192,32,70,240,0,0,0,0,
    0,0,0,0,0,0,143,137,129,193,135,129,129,129,129,129,129,193,7,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,224,142,57,134,49,140,97,12,99,24,230,224,6,48,132,
    33,6,30,0,0,0,0,0,192,1,12,96,0,3,216,193,24,198,48,132,33,12,97,8,
    67,188,7,0,0,0,0,0,0,0,0,128,32,0,192,97,24,134,97,24,198,3,0,0,
    0,0,0,132,0,224,24,99,140,49,198,24,33,3,0,0,0,0,56,0,1,8,64,0,
    226,17,130,8,52,224,3,27,136,65,24,239,1,0,0,0,0,0,0,0,0,135,16,66,
    8,33,132,16,242,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,184,115,
    48,206,48,134,48,134,48,134,48,134,48,134,48,134,120,239,3,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,119,48,134,49,12,97,8,67,24,194,16,239,
    1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,60,152,49,204,48,131,12,51,
    140,25,60,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,247,96,12,195,24,
    70,48,134,49,140,49,228,32,0,1,8,240,1,0,0,0,0,0,0,0,0,0,0,0,
    220,49,199,48,134,49,140,97,12,195,28,220,0,6,48,128,1,30,0,0,0,0,0,0,
    0,0,0,238,56,49,96,192,128,1,3,6,30,0,0,0,0,0,0,0,0,0,0,0,
    0,0,128,135,17,33,6,112,128,19,102,140,7,0,0,0,0,0,0,0,0,0,2,129,
    240,35,16,8,4,2,153,133,3,0,0,0,0,0,0,0,0,0,0,0,0,0,56,14,
    97,8,67,24,194,16,134,48,204,193,29,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,120,222,16,66,24,97,2,9,28,96,128,1,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,143,56,195,8,113,132,41,194,180,64,89,224,56,112,12,
    16,6,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,207,17,193,4,
    14,48,224,128,6,49,239,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,60,111,
    8,33,140,48,129,4,14,48,192,0,1,4,10,56,0,0,0,0,0,0,0,0,0,192,
    159,48,49,48,32,96,96,100,200,31,0,0,0,0,0,0,0,0,0,0,28,48,128,0,
    4,32,0,1,8,96,192,1,24,128,0,4,32,0,1,24,128,3,0,0,0,0,192,48,
    12,195,48,12,195,48,12,195,48,12,195,0,0,0,0,0,56,0,3,16,128,0,4,32,
    0,1,24,128,3,6,16,128,0,4,32,128,1,7,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,15,33,60,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,
};
constexpr GlyphInfo k_serif_17_glyphs[] = {
    {0, 5, 5},
    {105, 7, 7},
    {252, 8, 8},
    {420, 14, 14},
    {714, 11, 11},
    {945, 16, 16},
    {1281, 15, 15},
    {1596, 5, 5},
    {1701, 7, 7},
    {1848, 7, 7},
    {1995, 9, 8},
    {2184, 14, 14},
    {2478, 5, 5},
    {2583, 6, 6},
    {2709, 5, 5},
    {2814, 6, 6},
    {2940, 11, 11},
    {3171, 11, 11},
    {3402, 11, 11},
    {3633, 11, 11},
    {3864, 11, 11},
    {4095, 11, 11},
    {4326, 11, 11},
    {4557, 11, 11},
    {4788, 11, 11},
    {5019, 11, 11},
    {5250, 6, 6},
    {5376, 6, 6},
    {5502, 14, 14},
    {5796, 14, 14},
    {6090, 14, 14},
    {6384, 9, 9},
    {6573, 17, 17},
    {6930, 13, 12},
    {7203, 13, 12},
    {7476, 13, 13},
    {7749, 14, 14},
    {8043, 12, 12},
    {8295, 12, 12},
    {8547, 14, 14},
    {8841, 15, 15},
    {9156, 7, 7},
    {9303, 7, 7},
    {9450, 13, 13},
    {9723, 11, 11},
    {9954, 17, 17},
    {10311, 15, 15},
    {10626, 14, 14},
    {10920, 11, 11},
    {11151, 14, 14},
    {11445, 14, 13},
    {11739, 12, 12},
    {11991, 12, 11},
    {12243, 14, 14},
    {12537, 13, 12},
    {12810, 18, 17},
    {13188, 13, 12},
    {13461, 12, 11},
    {13713, 12, 12},
    {13965, 7, 7},
    {14112, 6, 6},
    {14238, 7, 7},
    {14385, 14, 14},
    {14679, 9, 8},
    {14868, 9, 8},
    {15057, 10, 10},
    {15267, 11, 11},
    {15498, 10, 10},
    {15708, 11, 11},
    {15939, 10, 10},
    {16149, 8, 6},
    {16317, 11, 11},
    {16548, 11, 11},
    {16779, 6, 5},
    {16905, 5, 5},
    {17010, 11, 10},
    {17241, 5, 5},
    {17346, 16, 16},
    {17682, 11, 11},
    {17913, 10, 10},
    {18123, 11, 11},
    {18354, 11, 11},
    {18585, 9, 8},
    {18774, 9, 9},
    {18963, 7, 7},
    {19110, 11, 11},
    {19341, 10, 10},
    {19551, 15, 15},
    {19866, 10, 10},
    {20076, 10, 10},
    {20286, 9, 9},
    {20475, 11, 11},
    {20706, 6, 6},
    {20832, 11, 11},
    {21063, 14, 14},
};
constexpr unsigned char k_serif_20_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,24,24,
    24,24,24,24,24,24,24,24,0,0,24,24,24,0,0,0,0,0,0,0,0,0,192,132,
    9,19,38,76,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,48,3,32,6,64,12,192,24,128,17,224,255,1,98,0,70,
    128,255,7,140,1,24,1,48,3,96,6,64,12,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,32,0,4,128,0,124,96,26,76,130,73,48,1,62,0,31,128,7,208,
    33,50,68,134,105,224,7,32,0,4,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    128,3,6,50,24,24,67,192,24,3,198,8,48,38,0,153,1,112,196,1,48,19,128,140,
    1,98,12,24,99,64,24,3,131,9,8,56,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,224,3,192,24,0,65,0,4,1,48,0,192,1,128,13,
    31,115,16,140,99,16,156,96,224,3,3,7,12,24,96,240,0,63,31,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,12,195,48,12,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,32,48,24,8,12,12,12,12,12,12,12,12,12,12,8,24,48,32,0,0,
    0,0,0,0,0,12,8,24,16,48,48,48,48,48,48,48,48,48,24,8,12,0,0,0,
    0,0,0,0,0,48,192,32,19,63,48,240,35,19,12,48,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,0,0,
    1,0,2,0,4,0,8,192,255,135,255,15,64,0,128,0,0,1,0,2,0,4,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,195,48,
    134,0,0,0,0,0,0,0,0,0,0,0,0,0,240,249,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,12,195,0,0,0,0,0,0,0,0,6,193,
    96,16,12,6,193,96,16,12,6,193,96,0,0,0,0,0,0,0,0,0,0,0,15,48,
    6,131,96,48,12,198,192,24,24,3,99,96,12,12,131,97,48,12,2,99,192,3,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,6,240,0,27,0,3,96,0,12,128,1,
    48,0,6,192,0,24,0,3,96,0,12,224,15,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,128,15,28,135,193,48,56,0,3,96,0,12,192,0,12,192,0,12,128,32,8,
    132,255,248,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,31,24,6,193,33,
    48,0,3,112,128,3,128,1,96,0,12,128,33,48,4,134,97,224,7,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,24,128,3,120,0,13,176,1,51,32,6,198,64,24,
    4,131,255,3,12,128,1,48,128,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    192,63,248,7,1,32,0,4,128,63,48,12,0,3,96,0,12,128,33,48,4,134,97,224,
    7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,62,48,12,130,97,0,12,128,
    60,120,12,7,227,96,28,12,131,97,48,12,6,99,192,7,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,192,127,248,15,129,33,16,0,2,32,0,4,192,0,8,128,1,16,
    0,2,96,0,4,192,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,31,56,
    6,131,97,48,12,6,99,192,7,140,193,96,28,140,129,113,48,12,134,99,192,7,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,15,48,6,195,112,48,6,198,192,56,24,
    6,195,113,224,13,128,1,48,4,131,49,224,3,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,131,195,0,0,0,12,14,3,0,0,0,0,0,0,0,0,0,0,
    0,0,0,130,131,0,0,0,0,6,131,97,16,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,48,0,120,0,62,128,15,192,3,192,1,0,15,0,248,0,128,
    15,0,120,0,192,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,255,225,255,3,0,0,0,0,
    255,31,254,63,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,2,0,60,0,224,3,0,30,0,224,1,0,
    7,128,7,224,3,248,0,60,0,8,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,128,15,199,24,78,96,0,3,12,112,224,0,1,8,0,0,0,48,128,
    1,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,248,1,
    224,96,0,3,8,24,0,129,112,34,140,57,66,12,35,198,32,100,12,66,198,32,98,12,
    34,196,48,194,152,27,12,103,128,1,0,48,0,0,14,6,128,31,0,0,0,0,0,0,
    0,0,0,0,0,12,0,14,128,7,64,3,160,3,152,1,196,0,226,128,97,64,112,240,
    63,8,24,4,28,3,204,131,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,224,127,192,96,96,112,48,56,24,28,12,6,254,1,131,129,129,193,192,96,96,48,48,
    24,24,12,134,255,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,254,
    128,193,97,192,24,96,12,0,7,128,1,192,0,96,0,112,0,48,0,24,96,24,24,24,
    6,248,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,254,3,24,14,
    24,24,24,48,24,48,24,112,24,96,24,96,24,96,24,112,24,48,24,48,24,24,24,14,
    254,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,255,193,128,96,
    64,48,0,24,4,12,2,254,1,131,128,65,192,0,96,0,48,0,24,16,12,136,255,7,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,254,31,6,132,1,97,0,24,
    4,6,129,127,96,16,24,4,6,128,1,96,0,24,0,6,224,7,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,192,15,48,56,24,48,12,32,12,0,14,0,6,
    0,6,0,6,60,14,48,12,48,12,48,24,48,48,56,192,15,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,224,135,15,3,6,6,12,12,24,24,48,48,96,
    224,255,192,128,129,1,3,3,6,6,12,12,24,24,48,48,96,248,225,3,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,126,24,24,24,24,24,24,24,24,24,24,24,24,24,
    126,0,0,0,0,0,0,0,0,0,126,24,24,24,24,24,24,24,24,24,24,24,24,24,
    24,24,24,28,7,0,0,0,0,0,0,0,0,0,126,60,24,8,24,4,24,3,152,1,
    216,0,120,0,120,0,216,0,152,1,152,3,24,7,24,14,24,28,126,120,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,224,7,48,0,6,192,0,24,0,3,96,0,
    12,128,1,48,0,6,192,0,24,16,3,250,127,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,30,128,135,3,56,56,192,131,6,60,104,32,131,12,50,200,48,
    131,24,49,136,25,131,176,48,8,15,131,96,48,8,6,131,0,48,62,192,7,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,30,248,225,128,129,7,
    6,26,24,200,96,32,135,129,24,6,194,24,8,102,32,184,129,192,6,2,30,8,112,32,
    192,225,3,6,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,
    7,48,28,24,48,12,48,12,96,14,96,6,96,6,96,6,96,14,96,12,96,12,48,24,
    48,48,28,192,7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,63,48,
    28,6,195,224,24,28,131,97,56,252,131,1,48,0,6,192,0,24,0,3,248,1,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,7,48,28,24,48,12,48,12,96,
    14,96,6,96,6,96,6,96,14,96,12,96,12,48,24,48,48,28,192,7,0,6,0,28,
    0,24,0,0,0,0,0,0,0,0,0,0,0,0,254,7,24,12,24,28,24,24,24,24,
    24,28,24,12,248,3,24,6,24,14,24,12,24,28,24,24,24,56,126,240,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,240,3,134,195,192,48,48,12,0,7,128,
    7,192,15,192,7,128,3,192,16,48,4,12,131,1,63,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,255,95,48,20,12,1,3,192,0,48,0,12,0,3,192,0,48,
    0,12,0,3,192,0,48,0,63,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,224,135,15,3,4,6,8,12,16,24,32,48,64,96,128,192,0,129,1,2,3,4,
    6,8,12,16,24,48,224,48,128,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,240,193,119,128,48,64,24,16,24,8,12,6,14,1,134,0,99,128,19,128,
    9,192,2,192,1,224,0,48,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,240,193,240,25,24,8,131,3,97,240,16,28,26,2,99,67,96,100,12,140,
    152,0,19,19,96,97,2,44,44,128,7,7,224,224,0,12,28,128,1,1,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,227,225,96,96,16,112,4,
    48,3,240,0,56,0,24,0,30,0,29,64,12,48,14,8,14,2,198,199,15,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,31,158,3,195,64,96,24,56,2,76,0,
    23,128,3,192,0,48,0,12,0,3,192,0,48,0,31,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,254,159,0,35,224,0,28,0,3,224,0,28,0,3,96,0,28,
    128,3,96,0,28,144,3,228,255,1,0,0,0,0,0,0,0,0,0,0,0,0,60,12,
    12,12,12,12,12,12,12,12,12,12,12,12,12,12,12,60,0,0,0,0,0,48,24,8,
    12,6,2,131,129,192,96,32,48,24,8,12,0,0,0,0,0,0,0,60,48,48,48,48,
    48,48,48,48,48,48,48,48,48,48,48,48,60,0,0,0,0,0,0,0,0,0,0,0,
    56,0,248,0,24,3,24,12,8,48,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,255,
    0,0,0,0,3,24,64,0,2,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,15,140,65,48,
    0,131,63,14,99,48,6,227,56,120,7,0,0,0,0,0,0,0,0,0,0,0,0,0,
    224,0,24,0,3,96,0,12,128,61,112,28,14,195,192,24,24,3,99,96,28,134,227,184,
    7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,15,195,
    24,100,0,3,24,192,0,12,98,24,60,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,120,0,12,128,1,48,0,6,207,48,30,134,99,96,12,140,129,49,48,12,135,241,224,
    59,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,15,
    12,195,48,6,230,127,6,96,0,12,194,49,240,0,0,0,0,0,0,0,0,0,0,0,
    0,0,31,51,2,6,12,252,48,96,192,128,1,3,6,12,24,248,1,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,223,49,30,134,99,96,12,140,129,
    49,48,12,135,241,224,9,0,65,48,24,7,62,0,0,0,0,0,0,0,0,224,0,24,
    0,3,96,0,12,128,57,112,12,14,195,96,24,12,131,97,48,12,134,193,248,62,0,0,
    0,0,0,0,0,0,0,0,0,0,195,0,128,195,48,12,195,48,12,227,3,0,0,0,
    0,0,0,0,195,0,128,195,48,12,195,48,12,195,48,12,115,0,0,0,0,0,0,0,
    224,0,24,0,3,96,0,12,128,241,49,4,70,192,4,248,0,55,96,12,140,131,97,248,
    62,0,0,0,0,0,0,0,0,0,0,0,14,195,48,12,195,48,12,195,48,12,227,3,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    112,142,3,199,50,56,12,195,96,24,6,195,48,24,134,193,48,12,134,97,48,140,239,251,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,192,57,112,12,14,195,96,24,12,131,97,48,12,134,193,248,62,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,15,12,195,48,6,102,96,
    6,102,96,12,195,48,240,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,192,61,112,28,14,195,192,24,24,3,99,96,28,134,227,176,7,6,192,
    0,24,128,15,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,223,49,30,
    134,99,96,12,140,129,49,48,12,135,241,224,25,0,3,96,0,12,224,3,0,0,0,0,
    0,0,0,0,0,0,0,0,56,207,51,199,12,48,192,0,3,12,48,224,3,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,65,152,65,6,240,0,15,96,130,
    25,198,15,0,0,0,0,0,0,0,0,0,0,0,0,12,12,12,126,12,12,12,12,12,
    12,204,204,120,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,
    113,48,8,6,193,32,24,4,131,96,16,12,3,99,192,57,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,240,121,6,194,16,12,129,25,152,128,9,
    112,0,7,32,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,62,198,51,12,99,28,194,104,4,211,12,54,9,44,22,112,28,
    224,48,192,96,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,240,121,12,129,9,120,0,7,112,0,13,200,65,24,207,7,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,121,6,194,16,12,129,25,
    152,128,9,112,0,7,32,0,2,48,32,1,14,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,240,159,96,132,1,6,48,192,0,3,12,114,144,255,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,56,128,1,16,0,2,64,0,8,128,1,48,192,3,192,0,24,
    0,3,64,0,8,0,1,32,0,12,0,7,0,0,0,0,0,0,128,64,32,16,8,4,
    2,129,64,32,16,8,4,2,129,64,32,16,0,0,0,0,0,0,192,3,192,0,24,0,
    3,96,0,12,128,1,96,0,56,128,1,16,0,3,96,0,12,128,1,48,0,6,120,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,128,15,131,255,131,225,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,
};
constexpr GlyphInfo k_serif_20_glyphs[] = {
    {0, 6, 6},
    {144, 8, 8},
    {336, 9, 9},
    {552, 17, 17},
    {960, 13, 13},
    {1272, 19, 19},
    {1728, 18, 18},
    {2160, 6, 6},
    {2304, 8, 8},
    {2496, 8, 8},
    {2688, 10, 10},
    {2928, 17, 17},
    {3336, 6, 6},
    {3480, 7, 7},
    {3648, 6, 6},
    {3792, 7, 7},
    {3960, 13, 13},
    {4272, 13, 13},
    {4584, 13, 13},
    {4896, 13, 13},
    {5208, 13, 13},
    {5520, 13, 13},
    {5832, 13, 13},
    {6144, 13, 13},
    {6456, 13, 13},
    {6768, 13, 13},
    {7080, 7, 7},
    {7248, 7, 7},
    {7416, 17, 17},
    {7824, 17, 17},
    {8232, 17, 17},
    {8640, 11, 11},
    {8904, 20, 20},
    {9384, 15, 14},
    {9744, 15, 15},
    {10104, 15, 15},
    {10464, 16, 16},
    {10848, 15, 15},
    {11208, 14, 14},
    {11544, 16, 16},
    {11928, 17, 17},
    {12336, 8, 8},
    {12528, 8, 8},
    {12720, 16, 15},
    {13104, 13, 13},
    {13416, 20, 20},
    {13896, 18, 18},
    {14328, 16, 16},
    {14712, 13, 13},
    {15024, 16, 16},
    {15408, 16, 15},
    {15792, 14, 14},
    {16128, 14, 13},
    {16464, 17, 17},
    {16872, 15, 14},
    {17232, 21, 21},
    {17736, 15, 14},
    {18096, 14, 13},
    {18432, 14, 14},
    {18768, 8, 8},
    {18960, 7, 7},
    {19128, 8, 8},
    {19320, 17, 17},
    {19728, 10, 10},
    {19968, 10, 10},
    {20208, 12, 12},
    {20496, 13, 13},
    {20808, 11, 11},
    {21072, 13, 13},
    {21384, 12, 12},
    {21672, 9, 7},
    {21888, 13, 13},
    {22200, 13, 13},
    {22512, 6, 6},
    {22656, 6, 6},
    {22800, 13, 12},
    {23112, 6, 6},
    {23256, 19, 19},
    {23712, 13, 13},
    {24024, 12, 12},
    {24312, 13, 13},
    {24624, 13, 13},
    {24936, 10, 10},
    {25176, 10, 10},
    {25416, 8, 8},
    {25608, 13, 13},
    {25920, 12, 11},
    {26208, 17, 17},
    {26616, 12, 11},
    {26904, 12, 11},
    {27192, 11, 11},
    {27456, 13, 13},
    {27768, 7, 7},
    {27936, 13, 13},
    {28248, 17, 17},
};
constexpr unsigned char k_sans_10_bits[] = {
    0,0,0,0,0,0,32,34,0,32,0,0,0,40,165,0,0,0,0,0,0,0,128,128,
    226,15,226,71,65,1,0,0,0,0,0,224,9,14,6,121,0,0,0,0,0,0,70,40,
    160,130,53,64,33,69,12,0,0,0,0,0,0,192,64,65,160,36,37,194,5,0,0,0,
    64,18,0,0,0,32,16,17,17,32,0,0,17,34,34,2,1,0,0,16,231,8,0,0,
    0,0,0,0,0,1,1,225,7,1,1,1,0,0,0,0,0,0,9,0,0,0,128,3,
    0,0,0,0,0,8,0,0,16,145,136,68,0,0,0,192,73,162,40,74,28,0,0,0,
    0,56,8,130,32,136,7,0,0,0,0,156,4,65,140,224,1,0,0,0,0,39,65,28,
    4,121,0,0,0,0,128,81,144,244,67,16,0,0,0,0,120,130,3,65,144,3,0,0,
    0,0,156,33,120,178,204,1,0,0,0,128,7,65,8,66,16,0,0,0,0,192,73,18,
    39,203,30,0,0,0,0,56,146,236,195,144,3,0,0,0,64,0,4,0,0,32,0,18,
    0,0,0,0,0,132,97,128,1,4,0,0,0,0,0,0,0,0,224,7,224,7,0,0,
    0,0,0,0,0,0,96,128,1,134,97,0,0,0,0,0,0,112,24,17,2,8,0,0,
    0,0,0,192,131,48,129,244,64,74,31,1,8,193,3,0,0,0,128,160,80,4,62,81,
    16,0,0,0,0,0,143,72,228,17,137,60,0,0,0,0,0,240,12,2,129,192,192,3,
    0,0,0,0,0,62,98,66,66,66,98,62,0,0,0,0,0,248,130,224,9,130,15,0,
    0,0,0,158,32,120,130,32,0,0,0,0,0,192,99,36,32,39,100,196,3,0,0,0,
    0,0,32,36,36,228,39,36,36,4,0,0,0,64,146,36,1,0,32,73,146,20,0,0,
    0,145,196,97,80,72,68,0,0,0,0,0,65,16,4,65,240,1,0,0,0,0,128,49,
    99,162,84,105,146,36,8,0,0,0,0,0,192,104,84,42,165,114,49,0,0,0,0,0,
    224,49,19,18,18,50,227,1,0,0,0,0,192,147,101,79,16,4,0,0,0,0,0,120,
    204,132,132,132,204,120,64,0,0,0,0,128,71,38,243,72,68,34,0,0,0,0,128,39,
    8,28,8,123,0,0,0,0,128,31,2,129,64,32,16,0,0,0,0,0,136,68,34,145,
    72,196,1,0,0,0,0,32,40,18,73,40,28,4,0,0,0,0,0,0,98,146,73,38,
    133,144,97,134,25,0,0,0,0,0,0,136,40,28,4,69,34,2,0,0,0,0,32,36,
    97,48,16,8,4,0,0,0,0,0,62,16,4,65,16,252,0,0,0,128,137,136,136,136,
    1,0,64,132,136,16,17,0,128,17,17,17,145,1,0,0,0,96,176,16,1,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,240,1,0,8,2,0,0,0,0,0,0,0,0,
    0,7,242,36,15,0,0,0,16,4,193,147,69,217,3,0,0,0,0,0,224,4,65,224,
    0,0,0,0,0,0,60,73,144,60,0,0,0,0,0,0,78,242,5,14,0,0,0,22,
    57,17,17,0,0,0,0,0,60,73,144,60,200,1,0,64,16,4,79,18,4,1,0,0,
    64,128,36,9,0,32,64,146,164,0,0,4,65,144,20,67,145,0,0,0,36,73,146,0,
    0,0,0,0,0,0,224,141,76,18,73,36,17,0,0,0,0,0,0,0,120,146,32,8,
    0,0,0,0,0,0,156,36,74,28,0,0,0,0,0,128,39,139,178,39,8,0,0,0,
    0,224,73,130,228,1,0,0,0,0,192,9,33,4,0,0,0,0,128,19,14,58,0,0,
    0,136,188,136,56,0,0,0,0,0,130,32,72,30,0,0,0,0,0,64,36,73,12,3,
    0,0,0,0,0,0,0,166,150,146,25,9,0,0,0,0,0,0,32,49,140,35,1,0,
    0,0,0,0,64,146,192,48,132,1,0,0,0,240,136,136,15,0,0,0,12,65,16,3,
    65,16,12,0,0,73,146,36,9,0,96,32,8,130,33,8,98,0,0,0,0,0,0,0,
    0,3,28,0,0,0,0,0,
};
constexpr GlyphInfo k_sans_10_glyphs[] = {
    {0, 3, 3},
    {39, 4, 4},
    {91, 5, 5},
    {156, 8, 8},
    {260, 6, 6},
    {338, 10, 10},
    {468, 8, 8},
    {572, 3, 3},
    {611, 4, 4},
    {663, 4, 4},
    {715, 5, 5},
    {780, 8, 8},
    {884, 3, 3},
    {923, 4, 4},
    {975, 3, 3},
    {1014, 4, 3},
    {1066, 6, 6},
    {1144, 6, 6},
    {1222, 6, 6},
    {1300, 6, 6},
    {1378, 6, 6},
    {1456, 6, 6},
    {1534, 6, 6},
    {1612, 6, 6},
    {1690, 6, 6},
    {1768, 6, 6},
    {1846, 3, 3},
    {1885, 3, 3},
    {1924, 8, 8},
    {2028, 8, 8},
    {2132, 8, 8},
    {2236, 5, 5},
    {2301, 10, 10},
    {2431, 7, 7},
    {2522, 7, 7},
    {2613, 7, 7},
    {2704, 8, 8},
    {2808, 6, 6},
    {2886, 6, 6},
    {2964, 8, 8},
    {3068, 8, 8},
    {3172, 3, 3},
    {3211, 3, 3},
    {3250, 7, 7},
    {3341, 6, 6},
    {3419, 9, 9},
    {3536, 7, 7},
    {3627, 8, 8},
    {3731, 6, 6},
    {3809, 8, 8},
    {3913, 7, 7},
    {4004, 6, 6},
    {4082, 7, 6},
    {4173, 7, 7},
    {4264, 7, 7},
    {4355, 10, 10},
    {4485, 7, 7},
    {4576, 7, 6},
    {4667, 7, 7},
    {4758, 4, 4},
    {4810, 4, 3},
    {4862, 4, 4},
    {4914, 8, 8},
    {5018, 6, 5},
    {5096, 5, 5},
    {5161, 6, 6},
    {5239, 6, 6},
    {5317, 6, 6},
    {5395, 6, 6},
    {5473, 6, 6},
    {5551, 4, 4},
    {5603, 6, 6},
    {5681, 6, 6},
    {5759, 3, 3},
    {5798, 3, 3},
    {5837, 6, 6},
    {5915, 3, 3},
    {5954, 10, 10},
    {6084, 6, 6},
    {6162, 6, 6},
    {6240, 6, 6},
    {6318, 6, 6},
    {6396, 5, 4},
    {6461, 5, 5},
    {6526, 4, 4},
    {6578, 6, 6},
    {6656, 6, 6},
    {6734, 8, 8},
    {6838, 6, 6},
    {6916, 6, 6},
    {6994, 5, 5},
    {7059, 6, 6},
    {7137, 3, 3},
    {7176, 6, 6},
    {7254, 8, 8},
};
constexpr unsigned char k_sans_12_bits[] = {
    0,0,0,0,0,0,0,0,0,32,132,16,66,0,33,0,0,0,0,20,69,1,0,0,
    0,0,0,0,0,0,0,0,0,32,129,128,63,36,144,240,7,5,18,0,0,0,0,0,
    0,0,4,14,21,5,6,28,52,21,30,4,4,0,0,0,0,0,14,209,132,20,180,224,
    50,80,67,18,209,8,3,0,0,0,0,0,0,0,12,36,8,48,208,36,75,156,49,222,
    0,0,0,0,32,9,0,0,0,0,0,66,132,16,66,16,2,0,0,64,16,66,24,99,
    132,16,1,0,0,0,0,192,48,0,0,0,0,0,0,0,0,0,0,0,0,128,0,2,
    8,254,129,0,2,8,0,0,0,0,0,0,0,0,128,137,0,0,0,0,0,56,0,0,
    0,0,0,0,0,128,25,0,0,0,16,34,132,8,33,66,0,0,0,0,128,195,68,76,
    72,72,72,204,132,3,0,0,0,0,0,192,3,3,3,3,3,3,3,195,15,0,0,0,
    0,0,128,67,4,4,4,6,131,193,192,7,0,0,0,0,0,128,67,4,4,132,3,4,
    76,132,3,0,0,0,0,0,0,6,7,133,68,68,196,15,4,4,0,0,0,0,0,192,
    71,64,192,3,4,12,76,132,3,0,0,0,0,0,0,135,64,64,199,76,72,200,132,7,
    0,0,0,0,0,192,15,4,4,2,2,2,1,129,1,0,0,0,0,0,128,199,68,204,
    132,71,68,72,140,7,0,0,0,0,0,128,195,68,76,204,140,15,4,132,3,0,0,0,
    0,0,192,12,192,12,0,0,0,0,204,0,76,4,0,0,0,0,0,0,0,192,224,96,
    128,1,56,0,3,0,0,0,0,0,0,0,0,0,0,0,0,0,252,3,192,63,0,0,
    0,0,0,0,0,0,0,0,0,0,48,0,7,96,128,193,193,0,0,0,0,0,0,0,
    0,56,9,194,16,2,32,8,0,0,0,0,0,0,0,0,224,129,97,8,76,190,36,75,
    162,36,75,126,8,128,33,224,1,0,0,0,24,48,160,32,65,194,136,31,97,131,0,0,
    0,0,0,0,224,35,38,36,230,35,36,36,228,3,0,0,0,0,0,128,71,40,32,32,
    32,32,64,136,7,0,0,0,0,0,0,31,194,4,9,18,44,72,144,48,31,0,0,0,
    0,0,0,240,19,16,16,240,19,16,16,240,3,0,0,0,0,0,62,129,64,224,19,8,
    4,2,0,0,0,0,0,0,60,132,4,8,16,39,72,16,33,60,0,0,0,0,0,0,
    128,32,65,130,4,249,19,36,72,144,32,0,0,0,0,128,136,136,136,136,0,0,0,136,
    136,136,136,136,4,0,0,0,64,136,8,9,14,28,104,144,33,70,24,0,0,0,0,0,
    128,64,32,16,8,4,2,129,31,0,0,0,0,0,0,134,57,166,148,82,82,201,36,147,
    64,2,1,0,0,0,0,0,0,48,228,72,145,38,73,178,68,137,19,6,0,0,0,0,
    0,0,224,33,38,72,176,96,193,130,136,225,1,0,0,0,0,0,240,137,133,98,159,64,
    32,16,0,0,0,0,0,0,224,33,38,72,176,96,193,130,136,225,1,2,12,0,0,0,
    128,143,152,144,152,143,136,144,144,48,0,0,0,0,0,0,143,128,128,1,15,24,144,24,
    15,0,0,0,0,0,192,31,2,2,2,2,2,2,2,2,0,0,0,0,0,0,4,9,
    18,36,72,144,32,97,68,112,0,0,0,0,0,0,0,131,132,9,49,66,130,4,10,12,
    24,0,0,0,0,0,0,0,0,98,36,70,98,36,101,150,66,41,148,194,56,12,1,0,
    0,0,0,0,0,0,66,100,44,24,24,56,36,70,194,0,0,0,0,0,0,67,34,52,
    28,8,8,8,8,8,0,0,0,0,0,0,254,64,32,48,24,8,4,2,254,0,0,0,
    0,0,39,132,16,66,8,33,28,0,0,132,32,132,32,132,32,4,0,0,192,33,132,16,
    66,8,33,7,0,0,0,0,24,144,32,4,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,126,0,96,16,0,0,0,0,0,0,0,0,0,
    0,0,0,192,3,2,241,68,34,31,0,0,0,0,16,16,16,208,49,17,18,18,50,209,
    1,0,0,0,0,0,0,0,199,36,16,8,76,28,0,0,0,0,0,6,6,198,103,38,
    38,38,102,198,7,0,0,0,0,0,0,0,142,73,232,23,24,120,0,0,0,0,102,196,
    19,66,8,33,0,0,0,0,0,0,0,124,98,98,98,98,98,124,32,32,28,0,0,2,
    2,2,58,38,98,66,66,66,66,0,0,0,0,4,73,146,4,0,128,32,73,146,164,1,
    0,2,129,64,36,81,56,20,18,17,0,0,0,36,73,146,36,0,0,0,0,0,0,0,
    0,224,59,102,34,66,34,36,66,34,36,66,0,0,0,0,0,0,0,0,0,160,99,34,
    38,36,36,36,4,0,0,0,0,0,0,0,142,73,44,20,155,56,0,0,0,0,0,0,
    0,64,199,68,72,72,200,68,71,64,64,0,0,0,0,0,128,207,76,76,76,204,140,15,
    12,12,12,0,0,128,54,66,8,33,0,0,0,0,0,128,39,8,12,12,123,0,0,0,
    0,132,120,66,8,33,24,0,0,0,0,0,0,64,76,76,76,76,204,140,15,0,0,0,
    0,0,0,0,98,145,136,70,225,32,0,0,0,0,0,0,0,0,0,50,201,36,147,42,
    204,48,195,12,0,0,0,0,0,0,0,0,17,141,131,224,216,68,0,0,0,0,0,0,
    0,98,145,136,66,225,32,16,12,3,0,0,0,224,67,24,66,8,62,0,0,0,0,0,
    48,24,8,8,8,14,8,8,8,24,48,0,0,64,68,68,68,68,68,4,0,0,192,128,
    128,128,128,1,131,129,128,128,192,0,0,0,0,0,0,0,0,0,0,112,4,14,0,0,
    0,0,0,0,0,0,
};
constexpr GlyphInfo k_sans_12_glyphs[] = {
    {0, 4, 4},
    {60, 5, 5},
    {135, 6, 6},
    {225, 10, 10},
    {375, 8, 8},
    {495, 11, 11},
    {660, 9, 9},
    {795, 3, 3},
    {840, 5, 5},
    {915, 5, 5},
    {990, 6, 6},
    {1080, 10, 10},
    {1230, 4, 4},
    {1290, 4, 4},
    {1350, 4, 4},
    {1410, 5, 4},
    {1485, 8, 8},
    {1605, 8, 8},
    {1725, 8, 8},
    {1845, 8, 8},
    {1965, 8, 8},
    {2085, 8, 8},
    {2205, 8, 8},
    {2325, 8, 8},
    {2445, 8, 8},
    {2565, 8, 8},
    {2685, 4, 4},
    {2745, 4, 4},
    {2805, 10, 10},
    {2955, 10, 10},
    {3105, 10, 10},
    {3255, 6, 6},
    {3345, 12, 12},
    {3525, 9, 8},
    {3660, 8, 8},
    {3780, 8, 8},
    {3900, 9, 9},
    {4035, 8, 8},
    {4155, 7, 7},
    {4260, 9, 9},
    {4395, 9, 9},
    {4530, 4, 4},
    {4590, 4, 4},
    {4650, 9, 8},
    {4785, 7, 7},
    {4890, 10, 10},
    {5040, 9, 9},
    {5175, 9, 9},
    {5310, 7, 7},
    {5415, 9, 9},
    {5550, 8, 8},
    {5670, 8, 8},
    {5790, 8, 7},
    {5910, 9, 9},
    {6045, 9, 8},
    {6180, 12, 12},
    {6360, 8, 8},
    {6480, 8, 7},
    {6600, 8, 8},
    {6720, 5, 5},
    {6795, 5, 4},
    {6870, 5, 5},
    {6945, 10, 10},
    {7095, 7, 6},
    {7200, 6, 6},
    {7290, 7, 7},
    {7395, 8, 8},
    {7515, 7, 7},
    {7620, 8, 8},
    {7740, 7, 7},
    {7845, 5, 4},
    {7920, 8, 8},
    {8040, 8, 8},
    {8160, 3, 3},
    {8205, 3, 3},
    {8250, 7, 7},
    {8355, 3, 3},
    {8400, 12, 12},
    {8580, 8, 8},
    {8700, 7, 7},
    {8805, 8, 8},
    {8925, 8, 8},
    {9045, 5, 5},
    {9120, 6, 6},
    {9210, 5, 5},
    {9285, 8, 8},
    {9405, 7, 7},
    {9510, 10, 10},
    {9660, 7, 7},
    {9765, 7, 7},
    {9870, 6, 6},
    {9960, 8, 8},
    {10080, 4, 4},
    {10140, 8, 8},
    {10260, 10, 10},
};
constexpr unsigned char k_sans_14_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,195,48,4,65,0,0,195,0,0,0,0,0,96,
    89,150,5,0,0,0,0,0,0,0,0,0,0,0,0,18,32,1,19,252,7,9,144,224,
    63,72,128,4,72,0,0,0,0,0,0,0,0,0,4,8,60,172,72,176,192,3,10,52,
    41,124,32,64,0,0,0,0,0,0,0,192,32,36,130,68,144,4,210,134,41,129,36,144,
    4,145,16,28,0,0,0,0,0,0,0,0,0,0,192,1,19,8,192,0,14,216,72,108,
    194,49,14,222,0,0,0,0,0,0,0,204,204,0,0,0,0,0,0,64,140,16,99,140,
    33,132,33,0,0,0,134,48,132,16,66,136,17,3,0,0,0,0,8,21,135,163,66,0,
    0,0,0,0,0,0,0,0,0,0,0,0,128,0,8,128,0,8,248,15,8,128,0,8,
    128,0,0,0,0,0,0,0,0,0,0,0,0,16,9,0,0,0,0,0,0,0,7,0,
    0,0,0,0,0,0,0,0,48,3,0,0,0,96,132,16,33,68,8,49,2,0,0,0,
    0,192,65,196,152,48,65,130,132,25,35,130,3,0,0,0,0,0,0,0,128,129,2,4,
    8,16,32,64,128,0,129,31,0,0,0,0,0,0,0,128,135,24,32,64,192,192,192,128,
    128,128,63,0,0,0,0,0,0,0,0,15,33,64,128,224,0,2,12,152,16,30,0,0,
    0,0,0,0,0,0,48,112,208,176,33,35,198,31,24,48,96,0,0,0,0,0,0,0,
    0,124,8,16,224,1,6,24,48,96,98,120,0,0,0,0,0,0,0,0,240,48,48,96,
    192,143,49,67,134,136,225,1,0,0,0,0,0,0,0,248,3,2,6,12,8,24,16,32,
    96,64,0,0,0,0,0,0,0,0,224,99,196,24,17,30,70,132,9,51,198,7,0,0,
    0,0,0,0,0,192,195,136,48,97,198,248,1,3,2,134,7,0,0,0,0,0,0,0,
    0,132,0,0,8,1,0,0,0,0,0,128,16,0,0,33,2,0,0,0,0,0,0,0,
    0,0,0,2,60,112,192,1,28,0,7,192,3,32,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,254,3,0,0,224,63,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,4,192,1,224,0,56,128,3,14,28,64,0,0,0,0,0,0,0,0,
    0,128,35,2,193,48,8,4,0,129,0,0,0,0,0,0,0,0,0,192,7,12,131,0,
    49,151,100,38,9,73,66,146,89,204,13,2,0,195,0,31,0,0,0,0,0,0,0,128,
    1,7,52,144,32,130,24,127,4,17,104,32,0,0,0,0,0,0,0,0,192,15,99,12,
    49,198,15,67,12,51,204,16,63,0,0,0,0,0,0,0,0,0,124,24,50,64,0,1,
    4,16,192,0,134,240,1,0,0,0,0,0,0,0,0,224,7,195,24,196,96,6,51,152,
    193,12,98,24,63,0,0,0,0,0,0,0,0,0,252,25,48,96,192,159,1,3,6,12,
    248,3,0,0,0,0,0,0,0,63,3,3,3,63,3,3,3,3,3,0,0,0,0,0,
    0,0,0,248,96,136,1,4,32,0,225,9,204,96,12,195,15,0,0,0,0,0,0,0,
    0,0,48,136,65,12,98,16,255,24,196,32,6,49,136,65,0,0,0,0,0,0,0,204,
    204,204,204,204,0,0,0,192,204,204,204,204,204,100,0,0,0,0,48,204,8,19,44,112,
    192,3,27,204,48,198,48,0,0,0,0,0,0,0,0,3,3,3,3,3,3,3,3,3,
    127,0,0,0,0,0,0,0,0,112,56,135,115,56,75,179,52,91,51,51,51,51,48,3,
    3,0,0,0,0,0,0,0,0,0,28,114,200,35,139,108,50,201,44,227,140,51,12,0,
    0,0,0,0,0,0,0,0,62,24,99,48,1,9,72,64,2,50,24,99,240,1,0,0,
    0,0,0,0,0,0,126,198,198,198,198,126,6,6,6,6,0,0,0,0,0,0,0,0,
    240,193,24,131,9,72,64,2,18,144,193,24,131,15,96,0,6,0,0,0,0,0,0,252,
    48,198,24,99,140,241,195,8,99,12,51,8,0,0,0,0,0,0,0,0,60,12,8,48,
    192,1,14,48,64,194,248,0,0,0,0,0,0,0,0,254,67,128,0,1,2,4,8,16,
    32,64,0,0,0,0,0,0,0,0,192,32,131,12,50,200,32,131,12,50,140,17,60,0,
    0,0,0,0,0,0,0,128,129,4,51,196,16,98,152,64,2,13,28,96,0,0,0,0,
    0,0,0,0,0,0,64,24,18,134,132,49,211,132,36,33,73,120,26,142,3,195,192,48,
    0,0,0,0,0,0,0,0,0,0,0,195,136,65,2,7,24,96,64,131,9,67,4,3,
    0,0,0,0,0,0,0,192,32,97,100,88,96,128,0,1,2,4,8,0,0,0,0,0,
    0,0,0,248,7,8,48,96,192,128,1,2,12,24,224,31,0,0,0,0,0,0,78,8,
    33,132,16,66,8,7,0,0,0,132,33,132,32,132,32,132,48,0,0,56,132,16,66,8,
    33,132,28,0,0,0,0,0,0,192,0,30,16,131,96,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,254,0,0,
    0,2,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,7,24,32,124,
    140,8,49,195,5,0,0,0,0,0,0,48,96,192,128,31,35,134,12,25,50,100,196,15,
    0,0,0,0,0,0,0,0,0,224,24,9,8,8,8,24,225,0,0,0,0,0,0,0,
    12,24,48,126,230,132,9,19,38,204,28,63,0,0,0,0,0,0,0,0,0,0,56,136,
    8,242,39,64,128,1,60,0,0,0,0,0,0,28,65,124,4,65,16,4,65,0,0,0,
    0,0,0,0,0,0,126,230,132,9,19,38,204,28,63,32,96,120,0,0,0,192,128,1,
    3,126,140,24,51,102,204,152,49,99,0,0,0,0,0,96,6,102,102,102,102,0,0,0,
    102,96,102,102,102,102,50,0,0,128,1,3,6,140,152,176,224,192,131,13,51,198,0,0,
    0,0,0,192,204,204,204,204,204,0,0,0,0,0,0,0,0,0,0,0,191,195,24,49,
    70,140,17,99,196,24,49,70,140,17,0,0,0,0,0,0,0,0,0,0,0,0,224,199,
    136,49,99,198,140,25,51,6,0,0,0,0,0,0,0,0,0,128,135,25,97,194,132,9,
    51,194,3,0,0,0,0,0,0,0,0,0,128,31,35,134,12,25,50,100,196,143,1,3,
    6,0,0,0,0,0,0,0,126,230,132,9,19,38,204,28,63,96,192,128,1,0,0,0,
    0,124,195,48,12,195,48,0,0,0,0,0,0,0,192,17,9,28,56,176,136,7,0,0,
    0,0,0,24,198,103,24,134,97,24,28,0,0,0,0,0,0,0,0,16,38,76,152,48,
    97,198,140,241,3,0,0,0,0,0,0,0,0,0,97,33,35,50,18,22,28,12,0,0,
    0,0,0,0,0,0,0,0,128,152,197,36,37,43,81,143,51,140,97,12,0,0,0,0,
    0,0,0,0,0,0,8,145,241,96,96,176,152,9,1,0,0,0,0,0,0,0,0,8,
    11,25,145,145,224,96,96,96,32,24,0,0,0,0,0,192,15,130,97,24,4,129,31,0,
    0,0,0,0,0,3,1,2,4,8,24,24,96,128,0,1,2,4,48,0,0,0,64,8,
    33,132,16,66,8,33,132,0,0,0,24,96,128,0,1,2,4,48,16,32,64,128,128,129,
    1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,60,2,28,0,0,0,0,0,0,
    0,0,0,0,0,
};
constexpr GlyphInfo k_sans_14_glyphs[] = {
    {0, 4, 4},
    {68, 6, 6},
    {170, 6, 6},
    {272, 12, 12},
    {476, 9, 9},
    {629, 13, 13},
    {850, 11, 11},
    {1037, 4, 4},
    {1105, 5, 5},
    {1190, 5, 5},
    {1275, 7, 7},
    {1394, 12, 12},
    {1598, 4, 4},
    {1666, 5, 5},
    {1751, 4, 4},
    {1819, 5, 5},
    {1904, 9, 9},
    {2057, 9, 9},
    {2210, 9, 9},
    {2363, 9, 9},
    {2516, 9, 9},
    {2669, 9, 9},
    {2822, 9, 9},
    {2975, 9, 9},
    {3128, 9, 9},
    {3281, 9, 9},
    {3434, 5, 5},
    {3519, 5, 5},
    {3604, 12, 12},
    {3808, 12, 12},
    {4012, 12, 12},
    {4216, 7, 7},
    {4335, 14, 14},
    {4573, 10, 10},
    {4743, 10, 10},
    {4913, 10, 10},
    {5083, 11, 11},
    {5270, 9, 9},
    {5423, 8, 8},
    {5559, 11, 11},
    {5746, 11, 11},
    {5933, 4, 4},
    {6001, 4, 4},
    {6069, 10, 9},
    {6239, 8, 8},
    {6375, 12, 12},
    {6579, 10, 10},
    {6749, 11, 11},
    {6936, 8, 8},
    {7072, 11, 11},
    {7259, 10, 10},
    {7429, 9, 9},
    {7582, 9, 9},
    {7735, 10, 10},
    {7905, 10, 10},
    {8075, 14, 14},
    {8313, 10, 10},
    {8483, 9, 9},
    {8636, 10, 10},
    {8806, 5, 5},
    {8891, 5, 5},
    {8976, 5, 5},
    {9061, 12, 12},
    {9265, 8, 7},
    {9401, 7, 7},
    {9520, 9, 9},
    {9673, 9, 9},
    {9826, 8, 8},
    {9962, 9, 9},
    {10115, 9, 9},
    {10268, 6, 5},
    {10370, 9, 9},
    {10523, 9, 9},
    {10676, 4, 4},
    {10744, 4, 4},
    {10812, 9, 8},
    {10965, 4, 4},
    {11033, 14, 14},
    {11271, 9, 9},
    {11424, 9, 9},
    {11577, 9, 9},
    {11730, 9, 9},
    {11883, 6, 6},
    {11985, 7, 7},
    {12104, 6, 5},
    {12206, 9, 9},
    {12359, 8, 8},
    {12495, 11, 11},
    {12682, 8, 8},
    {12818, 8, 8},
    {12954, 7, 7},
    {13073, 9, 9},
    {13226, 5, 5},
    {13311, 9, 9},
    {13464, 12, 12},
};
constexpr unsigned char k_sans_17_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,129,64,32,16,8,4,2,
    0,64,32,0,0,0,0,0,0,0,0,64,66,66,66,66,2,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,17,64,6,152,192,255,129,8,32,3,
    76,224,255,64,4,152,1,38,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,8,
    240,193,18,18,152,128,5,248,0,15,72,64,98,26,124,128,0,4,32,0,0,0,0,0,
    0,0,0,0,0,0,56,16,76,24,196,8,196,4,196,6,76,114,56,201,128,137,128,136,
    64,136,96,200,32,112,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,30,
    96,6,4,128,0,48,0,11,50,98,198,204,240,24,28,134,131,207,0,0,0,0,0,0,
    0,0,0,0,0,33,132,16,0,0,0,0,0,0,0,0,0,0,16,4,130,65,32,16,
    12,4,2,129,129,64,64,0,0,0,0,0,32,48,16,8,12,6,3,193,96,48,8,4,
    131,0,0,0,0,0,0,0,0,2,4,73,60,120,72,130,0,1,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,48,0,12,0,3,192,0,48,192,255,240,63,192,
    0,48,0,12,0,3,192,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,48,70,12,0,0,0,0,0,0,0,0,0,60,15,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,24,3,0,0,0,0,0,0,67,16,134,32,12,65,24,130,48,12,
    0,0,0,0,0,0,0,0,30,24,67,24,131,24,204,96,6,51,152,65,8,195,24,60,
    0,0,0,0,0,0,0,0,0,0,0,0,0,15,100,0,3,24,192,0,6,48,128,1,
    12,96,0,3,127,0,0,0,0,0,0,0,0,0,0,0,0,128,7,99,0,6,48,128,
    1,6,48,192,0,3,12,48,192,63,0,0,0,0,0,0,0,0,0,0,0,0,192,3,
    97,0,3,24,192,224,3,48,0,1,8,64,4,195,7,0,0,0,0,0,0,0,0,0,
    0,0,0,0,3,28,240,128,6,50,152,97,12,99,248,15,24,192,0,6,0,0,0,0,
    0,0,0,0,0,0,0,0,248,65,0,2,16,128,15,196,0,12,64,0,2,24,97,240,
    1,0,0,0,0,0,0,0,0,0,0,0,0,240,192,8,3,8,96,15,199,24,204,96,
    6,35,8,99,224,1,0,0,0,0,0,0,0,0,0,0,0,0,255,0,6,48,192,0,
    6,16,192,0,6,24,192,0,2,24,0,0,0,0,0,0,0,0,0,0,0,0,0,62,
    24,99,16,130,48,6,31,140,49,136,193,12,198,24,124,0,0,0,0,0,0,0,0,0,
    0,0,0,0,15,140,48,140,65,12,102,56,198,225,5,32,128,33,6,30,0,0,0,0,
    0,0,0,0,0,0,0,0,48,12,0,0,0,192,48,0,0,0,0,0,0,0,0,0,
    12,3,0,0,0,48,12,97,0,0,0,0,0,0,0,0,0,0,0,0,0,0,8,192,
    3,62,224,1,28,0,30,0,62,0,60,0,8,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,240,63,252,15,0,0,0,240,63,252,15,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,64,0,
    240,0,224,1,224,3,192,0,60,224,1,15,64,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,240,16,2,12,24,24,24,24,48,96,0,128,1,3,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,224,3,48,24,48,64,48,0,33,92,98,196,72,12,145,
    8,50,49,36,70,108,8,55,48,0,192,0,0,131,1,248,1,0,0,0,0,0,0,0,
    0,0,0,96,0,7,208,128,9,152,129,24,12,193,63,4,98,32,2,54,64,0,0,0,
    0,0,0,0,0,0,0,0,0,0,192,15,4,67,48,4,67,16,252,65,48,4,66,32,
    4,66,48,252,1,0,0,0,0,0,0,0,0,0,0,0,0,0,240,131,97,12,96,0,
    6,96,0,6,96,0,6,192,64,24,6,63,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,252,129,96,16,24,2,70,192,8,24,1,35,96,4,140,192,16,12,254,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,248,71,0,2,16,128,0,252,33,0,1,8,64,
    0,2,240,15,0,0,0,0,0,0,0,0,0,0,0,192,31,1,4,16,64,0,63,4,
    16,64,0,1,4,16,0,0,0,0,0,0,0,0,0,0,0,0,0,192,15,12,195,0,
    12,128,1,48,0,134,207,128,25,48,6,134,193,224,7,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,32,48,4,134,192,16,24,2,195,127,8,12,129,33,48,4,134,192,16,
    24,0,0,0,0,0,0,0,0,0,0,64,8,33,132,16,66,8,33,0,0,0,0,0,
    128,16,66,8,33,132,16,66,136,25,0,0,0,0,0,0,0,16,28,97,16,3,25,208,
    0,7,240,0,25,16,3,97,16,12,129,1,0,0,0,0,0,0,0,0,0,0,0,0,
    1,4,16,64,0,1,4,16,64,0,1,4,16,192,31,0,0,0,0,0,0,0,0,0,
    0,0,0,0,192,192,225,224,112,112,40,60,52,26,146,13,89,134,40,67,156,33,198,16,
    96,8,48,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,6,195,97,56,12,
    141,33,49,100,134,200,16,27,194,67,120,8,14,129,1,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,240,1,195,48,16,3,102,128,12,144,1,50,64,6,140,129,96,24,248,
    0,0,0,0,0,0,0,0,0,0,0,0,0,128,31,194,8,38,152,96,194,248,33,128,
    0,2,8,32,0,0,0,0,0,0,0,0,0,0,0,0,0,128,15,24,134,129,24,48,
    3,100,128,12,144,1,50,96,12,12,195,192,7,128,1,96,0,0,0,0,0,0,0,0,
    0,0,0,252,64,24,4,67,48,4,67,24,252,64,24,4,65,48,4,70,96,0,0,0,
    0,0,0,0,0,0,0,0,0,0,248,96,140,1,12,96,0,30,128,7,96,0,19,152,
    97,240,1,0,0,0,0,0,0,0,0,0,0,0,128,255,193,0,6,48,128,1,12,96,
    0,3,24,192,0,6,48,0,0,0,0,0,0,0,0,0,0,0,0,0,24,152,129,25,
    152,129,25,152,129,25,152,129,17,24,131,49,12,124,0,0,0,0,0,0,0,0,0,0,
    0,0,0,192,0,9,152,129,16,12,195,48,4,98,96,6,54,192,3,28,128,1,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,128,96,48,195,97,134,195,12,133,16,155,
    97,50,195,68,6,137,4,26,15,28,30,56,56,96,48,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,3,97,24,204,192,4,120,0,3,56,128,7,204,96,8,130,
    49,48,0,0,0,0,0,0,0,0,0,0,0,0,128,129,25,132,49,204,192,3,28,96,
    0,3,24,192,0,6,48,0,0,0,0,0,0,0,0,0,0,0,0,0,248,31,192,0,
    14,96,0,3,24,192,0,14,96,0,3,24,128,255,1,0,0,0,0,0,0,0,0,0,
    240,24,12,6,131,193,96,48,24,12,6,131,193,3,0,0,0,0,0,134,65,16,12,130,
    96,16,4,131,32,24,0,0,0,0,192,129,64,32,16,8,4,2,129,64,32,16,8,7,
    0,0,0,0,0,0,0,0,0,0,3,224,1,204,128,97,48,48,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,248,15,0,0,0,2,8,32,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,124,
    0,2,24,126,134,25,102,152,113,188,1,0,0,0,0,0,0,0,0,0,128,0,4,32,
    0,1,232,193,24,134,17,140,96,4,35,24,99,232,1,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,224,97,100,192,128,1,3,6,24,225,1,0,0,0,0,0,0,0,0,
    0,0,2,16,128,0,4,39,204,49,140,65,12,98,16,195,48,6,39,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,31,198,12,50,200,127,3,12,96,8,31,0,0,
    0,0,0,0,0,0,0,142,65,32,252,8,4,2,129,64,32,16,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,112,194,24,195,24,196,32,6,49,12,99,112,2,16,192,16,
    3,15,0,0,0,0,0,64,0,2,16,128,0,244,96,12,65,8,66,16,130,16,132,32,
    4,1,0,0,0,0,0,0,0,0,8,1,128,16,66,8,33,132,0,0,0,0,0,16,
    2,0,33,132,16,66,8,33,196,12,0,0,0,0,16,64,0,1,4,16,70,12,25,28,
    112,64,3,25,196,16,6,0,0,0,0,0,0,0,128,16,66,8,33,132,16,66,8,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,61,15,70,49,132,97,8,
    130,16,4,33,8,66,16,132,32,8,65,16,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,232,193,24,130,16,132,32,4,33,8,65,8,2,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,240,96,204,48,131,12,50,200,48,198,240,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,208,131,49,12,35,24,193,8,70,
    48,198,208,131,0,4,32,0,1,0,0,0,0,0,0,0,0,0,0,0,112,194,28,195,
    24,196,32,6,49,12,99,112,2,16,128,0,4,32,0,0,0,0,0,0,0,64,103,48,
    8,4,2,129,64,0,0,0,0,0,0,0,0,0,0,0,0,128,143,1,3,6,248,0,
    3,38,140,15,0,0,0,0,0,0,0,0,0,2,129,240,35,16,8,4,2,129,192,3,
    0,0,0,0,0,0,0,0,0,0,0,0,0,48,136,65,12,98,16,131,24,132,48,204,
    193,9,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,16,200,48,195,8,97,6,
    9,60,240,128,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,132,
    33,99,204,60,35,77,72,26,150,134,231,192,48,48,12,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,48,140,25,44,240,128,1,15,102,8,49,12,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,64,32,195,8,99,134,25,36,240,128,3,6,24,32,
    192,192,1,0,0,0,0,0,0,0,0,0,254,128,129,129,129,1,3,3,3,254,0,0,
    0,0,0,0,0,0,0,0,224,128,1,4,32,0,1,8,96,192,1,24,128,0,4,32,
    0,1,8,192,0,28,0,0,0,0,0,134,97,24,134,97,24,134,97,24,134,97,24,6,
    0,0,0,0,192,1,24,128,0,4,32,0,1,24,128,3,6,16,128,0,4,32,0,1,
    12,56,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,120,8,255,
    67,120,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
};
constexpr GlyphInfo k_sans_17_glyphs[] = {
    {0, 5, 5},
    {105, 7, 7},
    {252, 8, 8},
    {420, 14, 14},
    {714, 11, 11},
    {945, 16, 16},
    {1281, 13, 13},
    {1554, 5, 5},
    {1659, 7, 7},
    {1806, 7, 7},
    {1953, 9, 8},
    {2142, 14, 14},
    {2436, 5, 5},
    {2541, 6, 6},
    {2667, 5, 5},
    {2772, 6, 6},
    {2898, 11, 11},
    {3129, 11, 11},
    {3360, 11, 11},
    {3591, 11, 11},
    {3822, 11, 11},
    {4053, 11, 11},
    {4284, 11, 11},
    {4515, 11, 11},
    {4746, 11, 11},
    {4977, 11, 11},
    {5208, 6, 6},
    {5334, 6, 6},
    {5460, 14, 14},
    {5754, 14, 14},
    {6048, 14, 14},
    {6342, 9, 9},
    {6531, 17, 17},
    {6888, 12, 12},
    {7140, 12, 12},
    {7392, 12, 12},
    {7644, 13, 13},
    {7917, 11, 11},
    {8148, 10, 10},
    {8358, 13, 13},
    {8631, 13, 13},
    {8904, 5, 5},
    {9009, 5, 5},
    {9114, 12, 11},
    {9366, 10, 9},
    {9576, 15, 15},
    {9891, 13, 13},
    {10164, 13, 13},
    {10437, 10, 10},
    {10647, 13, 13},
    {10920, 12, 12},
    {11172, 11, 11},
    {11403, 11, 10},
    {11634, 12, 12},
    {11886, 12, 12},
    {12138, 17, 17},
    {12495, 12, 12},
    {12747, 11, 10},
    {12978, 12, 12},
    {13230, 7, 7},
    {13377, 6, 6},
    {13503, 7, 7},
    {13650, 14, 14},
    {13944, 9, 8},
    {14133, 9, 8},
    {14322, 10, 10},
    {14532, 11, 11},
    {14763, 9, 9},
    {14952, 11, 11},
    {15183, 10, 10},
    {15393, 7, 6},
    {15540, 11, 11},
    {15771, 11, 11},
    {16002, 5, 5},
    {16107, 5, 5},
    {16212, 10, 10},
    {16422, 5, 5},
    {16527, 17, 17},
    {16884, 11, 11},
    {17115, 10, 10},
    {17325, 11, 11},
    {17556, 11, 11},
    {17787, 7, 7},
    {17934, 9, 9},
    {18123, 7, 7},
    {18270, 11, 11},
    {18501, 10, 10},
    {18711, 14, 14},
    {19005, 10, 10},
    {19215, 10, 10},
    {19425, 9, 9},
    {19614, 11, 11},
    {19845, 6, 6},
    {19971, 11, 11},
    {20202, 14, 14},
};
constexpr unsigned char k_sans_20_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,24,24,
    24,24,24,24,24,24,24,24,24,0,0,24,24,0,0,0,0,0,0,0,0,0,192,132,
    9,19,38,76,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,152,1,16,3,32,6,96,4,248,127,240,255,0,49,0,35,0,70,
    128,255,7,255,15,24,1,48,2,96,6,64,12,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,4,128,0,124,224,31,76,130,9,48,1,62,128,31,128,7,144,
    1,50,68,135,127,224,7,32,0,4,128,0,0,0,0,0,0,0,0,0,0,0,0,0,
    128,3,6,50,24,24,67,192,24,3,198,8,48,38,0,153,1,112,196,1,48,19,192,140,
    1,98,12,24,99,64,24,3,131,9,12,56,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,224,1,240,3,56,2,24,0,24,0,48,0,120,0,236,48,
    204,49,6,51,6,30,14,12,28,30,248,51,240,113,0,0,0,0,0,0,0,0,0,0,
    0,0,0,12,195,48,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,48,16,
    24,24,12,12,12,12,12,12,12,12,12,12,24,24,16,48,0,0,0,0,0,0,4,12,
    24,24,16,48,48,48,48,48,48,48,48,16,24,24,12,4,0,0,0,0,0,0,0,48,
    192,32,147,127,120,224,225,159,76,48,192,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,0,0,1,0,2,0,4,0,
    8,192,255,135,255,15,64,0,128,0,0,1,0,2,0,4,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,195,48,12,1,0,0,0,0,
    0,0,0,0,0,0,0,224,243,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,195,0,0,0,0,0,0,0,0,6,193,96,16,12,6,193,96,
    16,12,6,193,96,0,0,0,0,0,0,0,0,0,0,0,15,240,7,199,96,48,12,198,
    192,24,24,3,99,96,12,12,131,97,48,28,3,127,192,3,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,15,248,1,51,0,6,192,0,24,0,3,96,0,12,128,1,48,
    0,6,192,128,255,240,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,15,248,
    7,225,0,56,0,6,96,0,12,192,0,12,192,0,12,192,0,12,192,255,248,31,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,128,31,248,7,193,1,48,0,6,96,192,7,
    248,0,112,0,12,128,1,48,4,135,127,224,3,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,56,128,7,240,0,27,48,3,98,96,12,134,65,48,12,134,255,243,127,0,
    3,96,0,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,63,248,7,3,96,
    0,12,128,31,240,15,194,1,96,0,12,128,1,48,132,131,127,224,3,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,30,224,15,142,224,0,12,128,1,184,7,255,225,113,
    24,12,131,97,48,28,7,127,192,7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    192,127,248,15,192,0,24,0,3,48,0,6,192,0,12,128,1,24,0,3,96,0,6,192,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,31,248,7,199,97,48,12,134,
    99,224,7,252,193,112,24,140,129,113,48,12,135,127,192,7,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,15,248,7,195,48,48,6,198,192,48,28,254,3,111,0,12,128,
    1,56,132,131,63,224,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,6,
    3,0,0,0,0,0,6,3,0,0,0,0,0,0,0,0,0,0,0,0,6,3,0,0,
    0,0,0,6,131,193,32,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,48,0,120,0,62,128,15,192,3,192,1,0,15,0,248,0,128,15,0,120,0,192,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,240,255,225,255,3,0,0,0,0,255,31,254,63,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,2,0,60,0,224,3,0,30,0,240,1,128,7,192,7,224,3,248,
    0,60,0,8,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,
    7,255,16,7,48,128,1,14,48,192,0,3,24,192,0,6,0,128,1,12,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,248,1,224,127,0,7,14,56,
    128,129,0,48,12,39,66,248,99,198,48,102,12,98,198,32,98,12,51,132,255,193,112,6,
    12,0,128,1,4,112,96,0,254,3,128,15,0,0,0,0,0,0,0,0,0,0,192,0,
    120,0,30,192,6,48,3,204,128,49,96,24,24,6,131,193,255,248,63,6,156,1,54,128,
    1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,252,3,255,193,224,48,48,12,
    12,131,193,63,240,31,12,14,3,195,192,48,48,12,14,255,193,63,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,224,7,252,135,131,113,0,12,128,1,96,0,24,0,
    6,128,1,192,0,48,0,56,24,252,7,126,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,192,63,224,127,48,120,24,48,12,48,6,24,3,140,1,198,0,99,128,49,
    192,24,48,12,30,254,7,255,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    192,127,248,15,3,96,0,12,128,1,240,31,254,195,0,24,0,3,96,0,12,128,255,240,
    31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,252,195,63,12,192,0,12,192,0,
    252,195,63,12,192,0,12,192,0,12,192,0,12,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,224,15,240,31,56,16,12,0,12,0,6,0,6,0,6,62,6,62,6,
    48,12,48,12,48,56,56,240,31,224,7,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,192,128,97,192,48,96,24,48,12,24,6,12,255,135,255,195,128,97,192,48,
    96,24,48,12,24,6,12,3,6,0,0,0,0,0,0,0,0,0,0,0,0,12,195,48,
    12,195,48,12,195,48,12,195,0,0,0,0,0,0,0,12,195,48,12,195,48,12,195,48,
    12,195,48,206,49,0,0,0,0,0,0,0,0,12,28,131,193,48,48,6,204,0,27,192,
    3,240,0,108,0,51,192,24,48,12,12,6,131,195,192,1,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,12,192,0,12,192,0,12,192,0,12,192,0,12,192,0,12,192,0,
    12,192,127,252,7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,1,135,3,
    14,15,30,30,60,108,104,216,216,48,177,97,38,195,108,134,241,12,227,24,198,49,12,96,
    24,192,48,128,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,129,
    225,192,240,96,120,48,108,24,54,12,51,134,25,195,152,97,216,48,108,24,60,12,30,6,
    14,3,7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,7,240,15,
    56,28,28,56,12,48,6,48,6,112,6,96,6,112,6,48,12,48,12,56,56,28,240,15,
    224,7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,252,193,63,12,199,96,
    12,198,96,12,199,63,252,193,0,12,192,0,12,192,0,12,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,224,7,240,15,56,28,28,56,12,48,6,48,6,112,6,96,
    6,112,6,48,12,48,12,56,56,28,240,15,224,7,0,6,0,12,0,28,0,0,0,0,
    0,0,0,0,0,0,0,252,1,255,193,112,48,24,12,6,195,193,63,240,7,12,3,131,
    193,96,48,48,12,12,3,198,128,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,31,248,15,131,113,0,6,128,1,240,1,252,1,120,0,12,128,3,112,6,199,255,224,
    7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,255,254,31,24,0,3,96,0,
    12,128,1,48,0,6,192,0,24,0,3,96,0,12,128,1,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,192,128,97,192,48,96,24,48,12,24,6,12,3,134,1,195,128,
    97,192,48,96,24,56,28,14,252,3,248,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,3,152,1,102,128,57,48,12,12,131,129,97,96,24,24,3,204,0,51,192,
    6,224,1,120,0,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,6,6,102,112,96,6,15,198,240,48,12,13,195,152,48,140,25,195,152,25,152,152,129,
    13,25,216,176,129,13,15,112,240,0,7,14,112,224,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,12,12,3,131,97,192,12,48,3,120,0,14,0,3,
    224,1,236,0,51,96,24,12,6,3,99,128,1,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,48,192,12,12,131,97,24,152,1,54,192,3,48,0,6,192,0,24,0,3,96,
    0,12,128,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,254,159,255,3,192,
    0,24,0,3,96,0,24,0,3,96,0,12,128,1,112,0,12,128,255,231,255,1,0,0,
    0,0,0,0,0,0,0,0,0,0,60,60,12,12,12,12,12,12,12,12,12,12,12,12,
    12,12,60,60,0,0,0,0,0,48,24,8,12,6,2,131,129,192,96,32,48,24,8,12,
    0,0,0,0,0,0,0,60,60,48,48,48,48,48,48,48,48,48,48,48,48,48,48,60,
    60,0,0,0,0,0,0,0,0,0,0,0,56,0,248,0,24,3,24,12,24,48,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,252,239,127,0,0,0,0,3,24,64,0,3,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,248,192,31,4,3,32,248,195,63,14,98,48,142,195,63,
    120,2,0,0,0,0,0,0,0,0,0,0,0,0,0,192,0,24,0,3,96,0,236,129,
    127,112,28,6,195,192,24,24,3,99,48,28,135,127,176,7,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,240,193,31,135,28,96,0,3,24,192,1,28,194,
    31,124,0,0,0,0,0,0,0,0,0,0,0,0,0,0,96,0,12,128,1,48,240,134,
    255,48,28,3,99,96,12,140,129,49,48,12,135,255,192,27,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,240,129,63,12,103,96,254,231,127,6,224,0,
    28,132,127,240,3,0,0,0,0,0,0,0,0,0,0,0,112,120,12,12,127,127,12,12,
    12,12,12,12,12,12,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,240,134,255,48,28,3,99,96,12,140,129,49,48,12,135,255,192,27,0,3,48,248,7,
    62,0,0,0,0,0,0,0,0,192,0,24,0,3,96,0,236,129,127,112,28,6,195,96,
    24,12,131,97,48,12,134,193,48,24,0,0,0,0,0,0,0,0,0,0,0,12,3,0,
    12,195,48,12,195,48,12,195,0,0,0,0,0,0,0,12,3,0,12,195,48,12,195,48,
    12,195,48,198,49,0,0,0,0,0,0,0,12,192,0,12,192,0,12,199,56,204,192,6,
    60,192,3,108,192,12,140,193,48,12,6,0,0,0,0,0,0,0,0,0,0,12,195,48,
    12,195,48,12,195,48,12,195,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,236,241,224,223,15,199,99,24,12,198,96,48,6,131,49,24,140,
    193,96,12,6,99,48,24,131,193,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,236,129,127,112,28,6,195,96,24,12,131,97,48,12,
    134,193,48,24,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    240,192,63,12,227,96,6,102,96,6,230,96,12,195,63,240,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,236,129,127,112,28,6,195,192,24,24,3,
    99,48,28,135,127,176,7,6,192,0,24,0,3,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,240,134,255,48,28,3,99,96,12,140,129,49,48,12,135,255,192,27,0,3,
    96,0,12,128,1,0,0,0,0,0,0,0,0,0,0,236,248,113,96,192,128,1,3,6,
    12,24,48,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,248,240,103,144,1,
    12,224,3,24,64,130,249,199,15,0,0,0,0,0,0,0,0,0,0,0,12,12,12,126,
    126,12,12,12,12,12,12,12,124,120,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,12,134,193,48,24,6,195,96,24,12,131,97,48,12,135,255,192,25,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,6,102,96,4,195,48,
    12,131,25,152,129,9,240,0,15,96,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,134,65,134,99,198,99,204,98,204,34,76,54,104,54,
    120,52,56,28,56,28,48,28,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,6,199,48,152,1,15,240,0,6,240,128,29,156,193,48,6,6,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,6,102,96,4,195,48,
    12,129,25,152,1,13,240,0,6,96,0,2,48,192,3,28,0,0,0,0,0,0,0,0,
    0,0,0,0,0,254,243,31,96,128,1,6,24,64,0,1,4,240,159,255,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,56,128,7,48,0,2,64,0,8,128,1,48,192,3,
    120,0,24,0,3,64,0,8,0,1,96,0,60,0,7,0,0,0,0,0,0,128,64,32,
    16,8,4,2,129,64,32,16,8,4,2,129,64,32,16,0,0,0,0,0,0,192,3,248,
    0,24,0,3,96,0,12,128,1,96,0,60,128,7,48,0,3,96,0,12,128,1,48,192,
    7,120,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,128,15,195,255,135,225,3,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,
};
constexpr GlyphInfo k_sans_20_glyphs[] = {
    {0, 6, 6},
    {144, 8, 8},
    {336, 9, 9},
    {552, 17, 17},
    {960, 13, 13},
    {1272, 19, 19},
    {1728, 16, 16},
    {2112, 6, 6},
    {2256, 8, 8},
    {2448, 8, 8},
    {2640, 10, 10},
    {2880, 17, 17},
    {3288, 6, 6},
    {3432, 7, 7},
    {3600, 6, 6},
    {3744, 7, 7},
    {3912, 13, 13},
    {4224, 13, 13},
    {4536, 13, 13},
    {4848, 13, 13},
    {5160, 13, 13},
    {5472, 13, 13},
    {5784, 13, 13},
    {6096, 13, 13},
    {6408, 13, 13},
    {6720, 13, 13},
    {7032, 7, 7},
    {7200, 7, 7},
    {7368, 17, 17},
    {7776, 17, 17},
    {8184, 17, 17},
    {8592, 11, 11},
    {8856, 20, 20},
    {9336, 14, 14},
    {9672, 14, 14},
    {10008, 14, 14},
    {10344, 15, 15},
    {10704, 13, 13},
    {11016, 12, 12},
    {11304, 16, 16},
    {11688, 15, 15},
    {12048, 6, 6},
    {12192, 6, 6},
    {12336, 14, 13},
    {12672, 12, 11},
    {12960, 17, 17},
    {13368, 15, 15},
    {13728, 16, 16},
    {14112, 12, 12},
    {14400, 16, 16},
    {14784, 14, 14},
    {15120, 13, 13},
    {15432, 13, 12},
    {15744, 15, 15},
    {16104, 14, 14},
    {16440, 20, 20},
    {16920, 14, 14},
    {17256, 13, 12},
    {17568, 14, 14},
    {17904, 8, 8},
    {18096, 7, 7},
    {18264, 8, 8},
    {18456, 17, 17},
    {18864, 11, 10},
    {19128, 10, 10},
    {19368, 12, 12},
    {19656, 13, 13},
    {19968, 11, 11},
    {20232, 13, 13},
    {20544, 12, 12},
    {20832, 8, 7},
    {21024, 13, 13},
    {21336, 13, 13},
    {21648, 6, 6},
    {21792, 6, 6},
    {21936, 12, 12},
    {22224, 6, 6},
    {22368, 19, 19},
    {22824, 13, 13},
    {23136, 12, 12},
    {23424, 13, 13},
    {23736, 13, 13},
    {24048, 9, 8},
    {24264, 10, 10},
    {24504, 8, 8},
    {24696, 13, 13},
    {25008, 12, 12},
    {25296, 16, 16},
    {25680, 12, 12},
    {25968, 12, 12},
    {26256, 11, 10},
    {26520, 13, 13},
    {26832, 7, 7},
    {27000, 13, 13},
    {27312, 17, 17},
};
constexpr unsigned char k_heavy_sans_10_bits[] = {
    0,0,0,0,0,0,128,49,134,0,99,0,0,0,0,165,20,0,0,0,0,0,0,0,
    144,80,252,89,252,40,40,0,0,0,0,0,0,130,231,240,240,80,62,4,0,0,0,0,
    0,56,179,196,10,254,65,141,52,114,0,0,0,0,0,0,0,120,48,96,224,77,158,25,
    126,0,0,0,0,32,9,0,0,0,192,136,49,198,24,194,0,0,192,24,194,24,35,198,
    0,0,0,0,81,57,78,69,0,0,0,0,0,0,64,64,64,248,65,64,64,0,0,0,
    0,0,0,0,152,9,0,0,0,128,3,0,0,0,0,0,0,152,1,0,0,16,145,137,
    76,0,0,0,0,142,77,36,18,217,56,0,0,0,0,0,120,48,24,12,6,227,3,0,
    0,0,0,192,3,131,97,24,6,31,0,0,0,0,0,30,24,140,3,131,121,0,0,0,
    0,0,192,112,44,146,63,4,2,0,0,0,0,128,207,224,129,193,96,30,0,0,0,0,
    0,120,6,143,205,100,227,0,0,0,0,0,224,131,65,48,24,6,3,0,0,0,0,0,
    142,205,198,177,217,124,0,0,0,0,0,112,108,50,155,15,230,1,0,0,0,0,96,6,
    102,0,0,0,0,102,96,38,0,0,0,0,0,64,120,14,14,120,64,0,0,0,0,0,
    0,0,0,126,0,126,0,0,0,0,0,0,0,0,0,2,28,112,112,28,2,0,0,0,
    0,0,120,24,195,0,4,1,0,0,0,0,0,128,7,33,114,41,165,148,82,242,16,130,
    7,0,0,0,0,24,60,52,38,126,98,67,0,0,0,0,0,0,62,102,38,62,102,102,
    62,0,0,0,0,0,128,103,48,8,12,6,30,0,0,0,0,0,240,49,51,54,54,54,
    243,1,0,0,0,0,0,62,131,193,103,48,248,0,0,0,0,0,240,25,12,62,131,193,
    0,0,0,0,0,0,248,140,12,196,140,140,248,0,0,0,0,0,0,140,140,140,252,140,
    140,140,0,0,0,0,192,204,204,204,0,0,0,204,204,204,204,6,0,0,0,96,198,134,
    7,7,30,108,152,3,0,0,0,0,0,48,24,12,6,131,193,7,0,0,0,0,0,0,
    231,156,115,206,63,219,108,51,12,0,0,0,0,0,0,48,114,114,242,178,51,51,3,0,
    0,0,0,0,0,15,51,198,132,25,51,195,3,0,0,0,0,0,192,103,54,155,125,6,
    3,0,0,0,0,0,0,15,51,198,132,25,51,195,3,12,0,0,0,0,0,62,54,102,
    54,62,54,102,0,0,0,0,0,128,103,50,248,96,50,31,0,0,0,0,0,127,6,131,
    193,96,48,0,0,0,0,0,128,153,153,153,153,153,25,15,0,0,0,0,0,192,144,152,
    153,13,15,15,6,0,0,0,0,0,0,128,57,203,201,110,86,243,30,119,24,3,0,0,
    0,0,0,0,192,204,134,7,131,199,198,12,0,0,0,0,0,96,204,134,135,3,3,3,
    3,0,0,0,0,0,248,97,56,14,195,240,7,0,0,0,56,99,140,49,198,56,0,0,
    32,70,196,136,8,0,0,199,24,99,140,49,7,0,0,0,0,6,143,17,0,0,0,0,
    0,0,0,0,0,0,0,0,0,224,3,0,4,1,0,0,0,0,0,0,0,0,0,240,
    192,124,51,31,0,0,0,0,12,6,131,207,100,54,249,0,0,0,0,0,0,192,25,131,
    193,1,0,0,0,128,64,32,159,109,100,243,1,0,0,0,0,0,0,112,108,63,3,15,
    0,0,0,192,140,121,198,24,3,0,0,0,0,0,128,207,54,178,249,96,30,0,0,96,
    48,24,124,54,147,201,4,0,0,0,27,182,109,0,128,13,219,182,7,0,192,96,48,216,
    60,14,143,13,0,0,0,182,109,219,0,0,0,0,0,0,0,240,207,102,155,109,182,25,
    0,0,0,0,0,0,0,128,207,102,50,153,0,0,0,0,0,0,0,56,182,145,141,3,
    0,0,0,0,0,0,224,51,153,77,62,131,1,0,0,0,0,0,159,109,100,243,129,64,
    0,0,0,0,222,24,99,0,0,0,0,0,128,103,120,152,7,0,0,0,192,152,111,140,
    113,0,0,0,0,0,0,152,76,38,155,15,0,0,0,0,0,0,96,38,179,112,24,0,
    0,0,0,0,0,0,0,76,214,229,206,29,59,0,0,0,0,0,0,0,64,230,97,120,
    100,0,0,0,0,0,0,0,51,155,133,195,96,24,0,0,0,0,128,135,49,198,7,0,
    0,0,128,195,32,16,14,6,2,131,3,0,0,68,68,68,68,68,0,0,112,32,16,24,
    28,6,129,112,0,0,0,0,0,0,0,0,12,112,0,0,0,0,0,
};
constexpr GlyphInfo k_heavy_sans_10_glyphs[] = {
    {0, 3, 3},
    {39, 5, 5},
    {104, 5, 5},
    {169, 8, 8},
    {273, 7, 7},
    {364, 10, 10},
    {494, 9, 9},
    {611, 3, 3},
    {650, 5, 5},
    {715, 5, 5},
    {780, 6, 5},
    {858, 8, 8},
    {962, 4, 4},
    {1014, 4, 4},
    {1066, 4, 4},
    {1118, 4, 4},
    {1170, 7, 7},
    {1261, 7, 7},
    {1352, 7, 7},
    {1443, 7, 7},
    {1534, 7, 7},
    {1625, 7, 7},
    {1716, 7, 7},
    {1807, 7, 7},
    {1898, 7, 7},
    {1989, 7, 7},
    {2080, 4, 4},
    {2132, 4, 4},
    {2184, 8, 8},
    {2288, 8, 8},
    {2392, 8, 8},
    {2496, 6, 6},
    {2574, 10, 10},
    {2704, 8, 8},
    {2808, 8, 8},
    {2912, 7, 7},
    {3003, 8, 8},
    {3107, 7, 7},
    {3198, 7, 7},
    {3289, 8, 8},
    {3393, 8, 8},
    {3497, 4, 4},
    {3549, 4, 4},
    {3601, 9, 8},
    {3718, 7, 6},
    {3809, 10, 10},
    {3939, 8, 8},
    {4043, 9, 8},
    {4160, 7, 7},
    {4251, 9, 8},
    {4368, 8, 8},
    {4472, 7, 7},
    {4563, 7, 7},
    {4654, 8, 8},
    {4758, 8, 8},
    {4862, 11, 11},
    {5005, 8, 8},
    {5109, 8, 7},
    {5213, 7, 7},
    {5304, 5, 5},
    {5369, 4, 4},
    {5421, 5, 5},
    {5486, 8, 8},
    {5590, 5, 5},
    {5655, 5, 5},
    {5720, 7, 7},
    {5811, 7, 7},
    {5902, 6, 6},
    {5980, 7, 7},
    {6071, 7, 7},
    {6162, 5, 4},
    {6227, 7, 7},
    {6318, 7, 7},
    {6409, 3, 3},
    {6448, 3, 3},
    {6487, 7, 7},
    {6578, 3, 3},
    {6617, 10, 10},
    {6747, 7, 7},
    {6838, 7, 7},
    {6929, 7, 7},
    {7020, 7, 7},
    {7111, 5, 5},
    {7176, 6, 6},
    {7254, 5, 5},
    {7319, 7, 7},
    {7410, 7, 7},
    {7501, 9, 9},
    {7618, 7, 6},
    {7709, 7, 7},
    {7800, 6, 6},
    {7878, 7, 7},
    {7969, 4, 4},
    {8021, 7, 7},
    {8112, 8, 8},
};
constexpr unsigned char k_heavy_sans_12_bits[] = {
    0,0,0,0,0,0,0,0,0,96,140,49,198,0,99,0,0,0,0,44,203,2,0,0,
    0,0,0,0,0,0,0,0,72,160,241,15,9,36,252,99,129,4,18,0,0,0,0,0,
    0,0,8,62,11,15,63,62,56,40,31,8,8,0,0,0,0,0,112,8,77,152,4,45,
    112,59,208,130,100,200,66,56,0,0,0,0,0,0,0,0,240,96,128,1,14,124,178,207,
    60,115,248,3,0,0,0,0,192,204,0,0,0,0,0,0,196,152,49,198,24,198,16,0,
    0,24,194,24,99,140,49,98,0,0,0,0,136,149,199,179,66,0,0,0,0,0,0,0,
    0,0,0,0,0,12,48,192,224,31,12,48,192,0,0,0,0,0,0,0,0,0,0,96,
    140,17,0,0,0,0,0,192,57,0,0,0,0,0,0,0,0,0,24,3,0,0,0,32,
    196,8,49,66,140,0,0,0,0,0,143,153,153,185,177,185,153,25,15,0,0,0,0,0,
    128,15,14,14,14,14,14,14,142,63,0,0,0,0,0,0,143,24,24,24,28,14,135,131,
    31,0,0,0,0,0,0,143,24,24,24,15,24,152,24,15,0,0,0,0,0,0,28,30,
    31,159,157,156,63,28,28,0,0,0,0,0,128,159,129,129,15,24,24,24,152,15,0,0,
    0,0,0,0,30,131,129,143,155,185,185,27,15,0,0,0,0,0,128,31,24,28,12,12,
    14,6,7,3,0,0,0,0,0,0,143,153,153,25,143,153,185,25,15,0,0,0,0,0,
    0,143,153,153,153,57,31,24,152,15,0,0,0,0,0,0,99,0,0,198,0,0,0,0,
    0,24,3,0,48,198,8,0,0,0,0,0,0,0,96,224,240,224,0,15,224,0,6,0,
    0,0,0,0,0,0,0,0,0,0,0,254,1,224,31,0,0,0,0,0,0,0,0,0,
    0,0,0,24,192,1,60,192,193,195,129,1,0,0,0,0,0,0,240,192,96,24,14,3,
    192,96,0,0,0,0,0,0,0,128,7,134,33,48,249,146,44,201,146,60,249,33,0,134,
    128,7,0,0,0,0,0,112,192,131,15,54,216,113,198,31,195,6,3,0,0,0,0,0,
    0,224,199,156,49,115,126,140,25,51,230,7,0,0,0,0,0,0,192,199,200,128,1,3,
    6,12,48,194,7,0,0,0,0,0,0,192,15,99,12,51,204,48,195,12,51,198,15,0,
    0,0,0,0,0,192,207,192,192,192,207,192,192,192,15,0,0,0,0,0,192,207,192,192,
    192,207,192,192,192,0,0,0,0,0,0,0,192,135,33,3,12,48,207,48,195,24,195,15,
    0,0,0,0,0,0,0,12,51,204,48,195,252,51,204,48,195,12,3,0,0,0,0,192,
    204,204,204,204,0,0,0,204,204,204,204,204,6,0,0,0,0,227,204,177,195,7,15,124,
    176,195,28,227,0,0,0,0,0,0,0,3,3,3,3,3,3,3,3,63,0,0,0,0,
    0,0,0,112,56,207,243,60,107,179,55,51,51,51,3,51,48,0,0,0,0,0,0,0,
    0,28,115,204,51,207,108,51,207,60,227,140,3,0,0,0,0,0,0,0,60,152,51,204,
    48,195,13,51,140,57,60,0,0,0,0,0,0,0,248,49,102,204,152,49,63,6,12,24,
    0,0,0,0,0,0,0,128,7,115,134,25,102,184,97,134,49,135,15,48,192,1,0,0,
    0,0,63,230,140,153,243,99,198,152,49,227,0,0,0,0,0,0,0,31,35,6,60,240,
    193,7,78,140,15,0,0,0,0,0,0,224,31,6,12,24,48,96,192,128,1,3,0,0,
    0,0,0,0,0,227,140,51,206,56,227,140,51,142,25,60,0,0,0,0,0,0,0,224,
    48,227,140,113,134,29,54,248,192,3,7,0,0,0,0,0,0,0,0,112,142,205,185,57,
    51,109,190,141,247,241,28,142,195,113,0,0,0,0,0,0,0,0,128,113,206,176,129,7,
    14,120,176,225,140,113,0,0,0,0,0,0,0,142,153,115,195,7,7,6,12,24,48,0,
    0,0,0,0,0,0,254,192,193,193,131,131,131,3,7,254,0,0,0,0,128,55,198,24,
    99,140,49,30,0,0,64,24,66,24,66,24,66,0,0,224,24,99,140,49,198,152,3,0,
    0,0,0,128,1,15,66,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,128,31,0,12,2,0,0,0,0,0,0,0,0,0,0,0,0,0,31,48,
    48,63,51,51,63,0,0,0,0,0,12,24,48,224,199,157,49,99,198,220,249,1,0,0,
    0,0,0,0,0,120,6,131,193,96,224,1,0,0,0,0,192,129,3,199,207,156,57,115,
    230,204,241,3,0,0,0,0,0,0,0,0,143,153,153,191,129,17,15,0,0,0,0,112,
    142,241,25,134,97,24,6,0,0,0,0,0,0,0,128,159,57,115,230,204,153,227,7,70,
    12,15,0,0,12,24,48,224,199,141,57,115,230,204,153,3,0,0,0,128,25,152,153,153,
    25,0,0,152,129,153,153,153,153,13,0,0,6,12,24,48,99,195,131,7,31,118,204,1,
    0,0,0,192,204,204,204,204,12,0,0,0,0,0,0,0,0,0,248,31,119,99,230,204,
    156,153,51,115,102,14,0,0,0,0,0,0,0,0,0,0,252,184,49,103,206,156,57,115,
    0,0,0,0,0,0,0,0,224,49,51,55,54,55,227,1,0,0,0,0,0,0,0,0,
    126,220,25,51,102,204,157,31,3,6,12,0,0,0,0,0,0,126,230,204,153,51,103,142,
    31,56,112,224,0,0,0,0,223,49,12,195,48,0,0,0,0,0,0,128,199,100,240,193,
    101,60,0,0,0,0,0,96,124,134,97,24,6,7,0,0,0,0,0,0,0,48,103,206,
    156,57,115,230,248,1,0,0,0,0,0,0,0,96,204,204,204,134,135,7,3,0,0,0,
    0,0,0,0,0,0,96,102,187,217,205,106,220,227,14,103,0,0,0,0,0,0,0,0,
    0,152,217,240,112,240,216,153,1,0,0,0,0,0,0,0,140,153,153,241,240,240,96,96,
    96,56,0,0,0,0,192,7,195,113,28,6,31,0,0,0,0,0,14,14,12,24,48,120,
    192,128,1,3,14,56,0,0,0,0,17,17,17,17,17,17,0,0,30,48,96,192,128,3,
    14,14,12,24,48,120,0,0,0,0,0,0,0,0,0,0,0,224,8,28,0,0,0,0,
    0,0,0,0,
};
constexpr GlyphInfo k_heavy_sans_12_glyphs[] = {
    {0, 4, 4},
    {60, 5, 5},
    {135, 6, 6},
    {225, 10, 10},
    {375, 8, 8},
    {495, 12, 12},
    {675, 10, 10},
    {825, 4, 4},
    {885, 5, 5},
    {960, 5, 5},
    {1035, 7, 6},
    {1140, 10, 10},
    {1290, 5, 5},
    {1365, 5, 5},
    {1440, 5, 5},
    {1515, 5, 4},
    {1590, 8, 8},
    {1710, 8, 8},
    {1830, 8, 8},
    {1950, 8, 8},
    {2070, 8, 8},
    {2190, 8, 8},
    {2310, 8, 8},
    {2430, 8, 8},
    {2550, 8, 8},
    {2670, 8, 8},
    {2790, 5, 5},
    {2865, 5, 5},
    {2940, 10, 10},
    {3090, 10, 10},
    {3240, 10, 10},
    {3390, 7, 7},
    {3495, 12, 12},
    {3675, 10, 9},
    {3825, 9, 9},
    {3960, 9, 9},
    {4095, 10, 10},
    {4245, 8, 8},
    {4365, 8, 8},
    {4485, 10, 10},
    {4635, 10, 10},
    {4785, 4, 4},
    {4845, 4, 4},
    {4905, 10, 9},
    {5055, 8, 8},
    {5175, 12, 12},
    {5355, 10, 10},
    {5505, 10, 10},
    {5655, 9, 9},
    {5790, 10, 10},
    {5940, 9, 9},
    {6075, 9, 9},
    {6210, 9, 8},
    {6345, 10, 10},
    {6495, 10, 9},
    {6645, 13, 13},
    {6840, 10, 9},
    {6990, 9, 9},
    {7125, 9, 9},
    {7260, 5, 5},
    {7335, 5, 4},
    {7410, 5, 5},
    {7485, 10, 10},
    {7635, 6, 6},
    {7725, 6, 6},
    {7815, 8, 8},
    {7935, 9, 9},
    {8070, 7, 7},
    {8175, 9, 9},
    {8310, 8, 8},
    {8430, 6, 5},
    {8520, 9, 9},
    {8655, 9, 9},
    {8790, 4, 4},
    {8850, 4, 4},
    {8910, 9, 8},
    {9045, 4, 4},
    {9105, 13, 12},
    {9300, 9, 9},
    {9435, 8, 8},
    {9555, 9, 9},
    {9690, 9, 9},
    {9825, 6, 6},
    {9915, 7, 7},
    {10020, 6, 6},
    {10110, 9, 9},
    {10245, 8, 8},
    {10365, 11, 11},
    {10530, 8, 8},
    {10650, 8, 8},
    {10770, 7, 7},
    {10875, 9, 9},
    {11010, 4, 4},
    {11070, 9, 9},
    {11205, 10, 10},
};
constexpr unsigned char k_heavy_sans_14_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,134,97,24,134,97,0,134,1,0,0,0,
    0,0,54,155,205,6,0,0,0,0,0,0,0,0,0,0,0,0,0,72,192,4,108,240,
    31,36,96,130,255,32,3,18,48,1,0,0,0,0,0,0,0,0,64,0,1,30,158,88,
    224,3,63,240,65,39,13,31,16,64,0,0,0,0,0,0,0,0,112,24,54,131,76,32,
    27,216,58,92,19,216,12,50,195,76,24,14,0,0,0,0,0,0,0,0,0,0,0,192,
    1,38,112,0,14,240,152,159,153,159,241,56,15,254,1,0,0,0,0,0,0,128,153,25,
    0,0,0,0,0,0,96,28,195,56,142,227,48,12,135,1,0,0,0,6,195,96,24,134,
    97,24,195,24,0,0,0,0,0,32,40,249,112,248,40,33,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,24,128,1,24,248,143,255,128,1,24,128,1,0,0,0,0,0,
    0,0,0,0,0,0,0,206,57,99,0,0,0,0,0,0,0,240,60,0,0,0,0,0,
    0,0,0,0,0,0,112,206,1,0,0,0,0,24,134,32,12,65,24,134,48,12,0,0,
    0,0,0,224,193,140,113,198,25,103,156,113,198,49,131,7,0,0,0,0,0,0,0,0,
    128,3,13,48,192,0,3,12,48,192,0,3,127,0,0,0,0,0,0,0,0,0,31,226,
    0,3,12,56,112,224,192,1,3,254,1,0,0,0,0,0,0,0,0,124,136,3,12,56,
    120,128,3,28,112,226,240,1,0,0,0,0,0,0,0,0,192,3,15,62,236,152,99,142,
    127,224,128,3,14,0,0,0,0,0,0,0,0,224,143,3,14,248,1,14,112,192,1,39,
    14,31,0,0,0,0,0,0,0,0,0,30,12,56,224,135,51,206,57,231,28,51,120,0,
    0,0,0,0,0,0,0,0,254,1,7,14,56,112,192,1,3,14,24,112,0,0,0,0,
    0,0,0,0,0,240,225,140,115,206,240,225,140,113,198,57,195,7,0,0,0,0,0,0,
    0,0,128,135,51,198,24,103,156,115,252,1,3,14,15,0,0,0,0,0,0,0,0,0,
    195,48,0,192,48,12,0,0,0,0,0,0,192,48,12,0,48,140,99,24,0,0,0,0,
    0,0,0,0,0,0,2,60,248,192,1,28,128,15,192,3,32,0,0,0,0,0,0,0,
    0,0,0,0,0,0,224,63,254,3,0,0,224,63,254,3,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,4,192,3,240,0,56,128,3,15,60,64,0,0,0,0,0,
    0,0,0,0,0,60,114,96,112,56,24,28,0,28,28,0,0,0,0,0,0,0,0,0,
    128,15,24,6,3,66,190,201,76,50,147,204,36,179,152,31,12,0,134,1,62,0,0,0,
    0,0,0,0,0,56,224,3,31,216,224,14,99,252,99,48,131,29,28,0,0,0,0,0,
    0,0,0,0,248,195,57,142,113,142,63,28,227,56,199,57,198,31,0,0,0,0,0,0,
    0,0,0,192,199,145,3,14,24,96,128,3,14,112,0,31,0,0,0,0,0,0,0,0,
    0,248,131,99,56,140,195,57,156,195,57,156,195,56,134,63,0,0,0,0,0,0,0,0,
    0,0,254,56,224,128,3,254,56,224,128,3,14,248,7,0,0,0,0,0,0,0,0,248,
    227,128,3,14,248,227,128,3,14,56,224,0,0,0,0,0,0,0,0,0,0,248,113,200,
    1,14,48,158,193,28,230,48,142,193,15,0,0,0,0,0,0,0,0,0,192,97,28,198,
    97,28,198,127,28,198,97,28,198,97,28,6,0,0,0,0,0,0,0,224,156,115,206,57,
    231,28,0,0,0,0,156,115,206,57,231,156,115,110,0,0,0,0,0,112,28,231,112,7,
    63,240,1,63,240,7,247,112,30,199,3,0,0,0,0,0,0,0,0,128,3,7,14,28,
    56,112,224,192,129,3,255,0,0,0,0,0,0,0,0,0,128,135,231,225,249,124,62,159,
    123,231,222,185,115,206,156,3,231,192,1,0,0,0,0,0,0,0,0,0,0,128,195,120,
    140,207,248,140,219,184,141,243,56,143,227,56,14,0,0,0,0,0,0,0,0,0,0,224,
    7,231,56,156,195,25,156,193,57,156,195,113,14,126,0,0,0,0,0,0,0,0,0,0,
    254,56,231,184,227,142,59,231,143,3,14,56,0,0,0,0,0,0,0,0,0,0,248,192,
    57,14,231,112,6,103,112,14,231,112,156,131,31,128,1,56,0,0,0,0,0,0,0,252,
    225,28,199,56,198,57,254,112,142,99,28,231,56,0,0,0,0,0,0,0,0,0,240,113,
    196,0,7,252,225,15,60,224,132,243,7,0,0,0,0,0,0,0,0,248,15,7,28,112,
    192,1,7,28,112,192,1,7,0,0,0,0,0,0,0,0,0,142,115,156,227,28,231,56,
    199,57,206,113,156,195,7,0,0,0,0,0,0,0,0,0,56,184,193,28,231,24,230,112,
    7,27,248,192,7,28,0,0,0,0,0,0,0,0,0,0,0,24,199,141,227,206,51,167,
    25,219,142,109,199,231,225,241,240,120,112,60,0,0,0,0,0,0,0,0,0,0,0,192,
    113,142,225,14,62,224,128,7,124,112,199,49,134,3,0,0,0,0,0,0,0,0,0,135,
    115,14,115,248,129,7,56,192,0,6,48,128,1,0,0,0,0,0,0,0,0,0,254,1,
    7,30,60,120,224,193,131,7,14,248,15,0,0,0,0,0,0,158,227,56,142,227,56,142,
    227,120,0,0,0,0,48,12,130,97,16,4,131,32,24,6,0,0,224,97,24,134,97,24,
    134,97,152,7,0,0,0,0,0,0,128,1,60,96,6,195,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,248,3,0,0,
    3,3,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,15,56,96,252,140,
    25,51,199,13,0,0,0,0,0,0,192,1,7,28,240,199,57,199,28,115,204,49,231,252,
    1,0,0,0,0,0,0,0,0,0,192,115,48,48,48,48,112,192,3,0,0,0,0,0,
    0,224,128,3,142,63,231,140,51,206,56,227,156,227,15,0,0,0,0,0,0,0,0,0,
    0,0,60,156,49,206,63,3,12,112,4,15,0,0,0,0,0,0,128,199,112,252,28,14,
    135,195,225,112,0,0,0,0,0,0,0,0,0,0,252,57,103,156,113,198,25,231,28,127,
    192,1,195,7,0,0,0,224,128,3,14,248,227,156,115,206,57,231,156,115,206,1,0,0,
    0,0,0,224,28,112,206,57,231,156,3,0,0,0,156,3,206,57,231,156,115,206,28,0,
    0,0,14,56,224,128,115,238,248,225,131,15,126,184,227,28,0,0,0,0,0,0,206,57,
    231,156,115,206,57,0,0,0,0,0,0,0,0,0,0,0,128,191,195,57,227,156,113,206,
    56,103,156,51,206,25,231,12,0,0,0,0,0,0,0,0,0,0,0,0,0,224,143,115,
    206,57,231,156,115,206,57,7,0,0,0,0,0,0,0,0,0,0,0,30,206,24,103,156,
    113,198,57,131,7,0,0,0,0,0,0,0,0,0,0,0,254,56,231,152,99,142,57,230,
    156,63,14,56,224,0,0,0,0,0,0,0,0,240,231,156,113,198,25,103,156,115,252,1,
    7,28,112,0,0,0,0,0,192,239,112,56,28,14,135,3,0,0,0,0,0,0,0,0,
    120,140,12,252,248,192,197,120,0,0,0,0,0,0,128,195,241,115,56,28,14,7,131,7,
    0,0,0,0,0,0,0,0,0,56,231,156,115,206,57,231,156,115,252,1,0,0,0,0,
    0,0,0,0,0,128,227,198,156,177,99,195,7,7,14,0,0,0,0,0,0,0,0,0,
    0,0,0,96,206,204,153,185,115,119,188,135,247,240,30,142,3,0,0,0,0,0,0,0,
    0,0,0,0,192,152,59,62,56,112,240,113,103,12,0,0,0,0,0,0,0,0,0,192,
    113,99,206,216,177,225,131,7,7,14,12,30,0,0,0,0,0,0,248,193,225,225,112,120,
    56,248,1,0,0,0,0,0,0,56,112,192,0,3,12,56,112,128,3,12,48,192,0,7,
    56,0,0,0,0,33,132,16,66,8,33,132,16,2,0,0,128,3,28,96,128,1,6,56,
    192,129,3,6,24,96,192,129,3,0,0,0,0,0,0,0,0,0,0,0,0,0,30,241,
    31,224,0,0,0,0,0,0,0,0,0,0,0,
};
constexpr GlyphInfo k_heavy_sans_14_glyphs[] = {
    {0, 5, 5},
    {85, 6, 6},
    {187, 7, 7},
    {306, 12, 12},
    {510, 10, 10},
    {680, 14, 14},
    {918, 12, 12},
    {1122, 4, 4},
    {1190, 6, 6},
    {1292, 6, 6},
    {1394, 8, 7},
    {1530, 12, 12},
    {1734, 5, 5},
    {1819, 6, 6},
    {1921, 5, 5},
    {2006, 6, 5},
    {2108, 10, 10},
    {2278, 10, 10},
    {2448, 10, 10},
    {2618, 10, 10},
    {2788, 10, 10},
    {2958, 10, 10},
    {3128, 10, 10},
    {3298, 10, 10},
    {3468, 10, 10},
    {3638, 10, 10},
    {3808, 6, 6},
    {3910, 6, 6},
    {4012, 12, 12},
    {4216, 12, 12},
    {4420, 12, 12},
    {4624, 8, 8},
    {4760, 14, 14},
    {4998, 11, 11},
    {5185, 11, 11},
    {5372, 10, 10},
    {5542, 12, 12},
    {5746, 10, 10},
    {5916, 10, 10},
    {6086, 11, 11},
    {6273, 12, 12},
    {6477, 5, 5},
    {6562, 5, 5},
    {6647, 12, 11},
    {6851, 9, 9},
    {7004, 14, 14},
    {7242, 12, 12},
    {7446, 12, 12},
    {7650, 10, 10},
    {7820, 12, 12},
    {8024, 11, 11},
    {8211, 10, 10},
    {8381, 10, 10},
    {8551, 11, 11},
    {8738, 11, 11},
    {8925, 15, 15},
    {9180, 11, 11},
    {9367, 11, 10},
    {9554, 10, 10},
    {9724, 6, 6},
    {9826, 6, 5},
    {9928, 6, 6},
    {10030, 12, 12},
    {10234, 7, 7},
    {10353, 7, 7},
    {10472, 9, 9},
    {10625, 10, 10},
    {10795, 8, 8},
    {10931, 10, 10},
    {11101, 10, 10},
    {11271, 7, 6},
    {11390, 10, 10},
    {11560, 10, 10},
    {11730, 5, 5},
    {11815, 5, 5},
    {11900, 10, 9},
    {12070, 5, 5},
    {12155, 15, 15},
    {12410, 10, 10},
    {12580, 10, 10},
    {12750, 10, 10},
    {12920, 10, 10},
    {13090, 7, 7},
    {13209, 8, 8},
    {13345, 7, 7},
    {13464, 10, 10},
    {13634, 9, 9},
    {13787, 13, 13},
    {14008, 9, 9},
    {14161, 9, 9},
    {14314, 8, 8},
    {14450, 10, 10},
    {14620, 5, 5},
    {14705, 10, 10},
    {14875, 12, 12},
};
constexpr unsigned char k_heavy_sans_17_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,7,7,7,7,
    7,7,6,6,0,7,7,7,0,0,0,0,0,0,0,0,0,176,97,195,134,13,27,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,34,192,12,48,
    131,255,227,255,96,6,152,193,255,241,127,48,3,204,0,51,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,12,192,0,63,248,199,77,220,128,15,248,7,124,192,206,236,252,7,
    63,192,0,12,192,0,0,0,0,0,0,0,0,0,0,0,0,120,48,152,49,48,99,96,
    102,192,76,128,217,30,222,102,128,204,128,153,129,49,3,99,6,131,7,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,120,0,127,128,35,192,1,224,1,248,49,
    252,25,231,143,227,195,227,193,255,193,239,1,0,0,0,0,0,0,0,0,0,0,0,24,
    99,140,1,0,0,0,0,0,0,0,0,0,0,12,14,6,7,7,3,131,3,3,3,7,
    7,6,14,12,0,0,0,0,0,0,3,7,7,14,14,14,14,14,14,14,14,14,7,7,
    3,0,0,0,0,0,0,0,64,144,228,143,15,31,127,146,32,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,96,0,24,0,6,128,1,254,135,255,
    1,6,128,1,96,0,24,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,142,227,24,199,0,0,0,0,0,0,0,0,0,0,192,231,3,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,28,199,1,0,0,0,0,0,0,0,131,65,
    48,24,4,131,193,48,24,12,131,1,0,0,0,0,0,0,0,0,128,7,254,225,28,135,
    115,56,135,115,56,135,115,56,206,225,31,120,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,124,224,7,114,0,7,112,0,7,112,0,7,112,0,7,254,227,63,0,0,0,0,
    0,0,0,0,0,0,0,0,0,192,7,255,48,30,192,1,28,192,1,14,112,192,3,30,
    240,31,255,1,0,0,0,0,0,0,0,0,0,0,0,0,0,124,224,31,226,1,28,224,
    193,15,252,0,28,192,17,28,255,225,7,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,15,240,128,15,236,224,14,230,48,14,255,243,63,224,0,14,224,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,254,225,31,6,96,0,126,224,31,194,1,60,192,51,28,255,
    193,7,0,0,0,0,0,0,0,0,0,0,0,0,0,128,15,252,225,16,7,240,15,255,
    241,60,143,243,56,206,227,31,248,0,0,0,0,0,0,0,0,0,0,0,0,0,0,255,
    241,31,192,1,30,224,0,14,112,0,7,56,128,3,28,192,1,0,0,0,0,0,0,0,
    0,0,0,0,0,0,192,15,254,241,28,199,225,28,252,224,15,207,113,56,207,227,31,252,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,124,224,15,199,113,28,199,115,60,254,
    195,63,192,33,30,254,192,3,0,0,0,0,0,0,0,0,0,0,0,0,0,192,225,112,
    0,0,0,135,195,1,0,0,0,0,0,0,0,0,0,0,14,135,3,0,0,56,28,14,
    195,97,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,120,128,15,252,128,7,224,
    1,240,3,224,3,224,1,64,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,254,135,255,1,0,0,0,254,135,255,1,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,8,0,30,0,31,0,62,0,
    30,128,7,248,192,7,120,0,2,0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,
    195,31,241,128,3,7,30,28,112,0,0,7,28,112,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,128,15,192,127,192,193,193,1,134,241,137,241,51,51,102,102,204,204,216,
    24,255,97,252,192,1,0,7,3,252,7,224,3,0,0,0,0,0,0,0,0,0,0,0,
    192,7,240,1,124,128,59,224,14,24,7,199,193,127,248,63,14,142,131,119,192,1,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,192,31,248,15,199,225,56,28,135,127,240,31,
    142,195,225,56,30,255,225,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,7,
    255,120,200,3,28,192,1,28,192,1,60,128,135,240,15,124,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,128,63,224,63,56,30,14,143,131,227,224,56,56,14,142,195,227,120,
    248,15,254,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,31,254,225,0,14,
    224,0,254,225,31,14,224,0,14,224,31,254,1,0,0,0,0,0,0,0,0,0,0,0,
    0,0,254,225,31,14,224,0,14,224,31,254,225,0,14,224,0,14,224,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,63,240,31,30,196,3,112,0,28,62,135,207,129,
    243,224,120,56,252,15,252,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,56,
    60,14,143,195,227,240,56,60,254,143,255,227,240,56,60,14,143,195,227,240,0,0,0,0,
    0,0,0,0,0,0,0,0,142,227,56,142,227,56,142,227,56,0,0,0,0,0,0,128,
    227,56,142,227,56,142,227,56,207,121,14,0,0,0,0,0,0,0,0,224,240,56,30,206,
    129,59,224,7,248,0,126,128,63,224,30,56,15,142,135,195,3,0,0,0,0,0,0,0,
    0,0,0,0,0,0,128,3,28,224,0,7,56,192,1,14,112,128,3,28,224,31,255,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,131,135,7,15,31,31,62,62,252,
    126,184,237,112,223,225,190,195,57,135,115,14,7,28,14,56,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,128,131,227,225,120,56,62,142,159,227,230,184,59,206,143,
    243,227,248,56,62,14,15,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,31,
    240,31,30,207,131,115,224,28,120,7,222,129,243,224,120,60,252,7,126,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,248,135,255,56,142,227,57,158,227,248,143,127,56,128,
    3,56,128,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,126,192,127,120,60,
    15,206,129,115,224,29,120,7,206,131,227,241,240,31,248,1,224,0,112,0,0,0,0,0,
    0,0,0,0,0,0,0,254,192,127,56,15,199,225,56,156,135,127,240,15,206,195,113,56,
    30,135,3,0,0,0,0,0,0,0,0,0,0,0,0,0,128,63,252,227,33,14,224,1,
    252,129,63,192,7,112,134,231,63,252,1,0,0,0,0,0,0,0,0,0,0,0,0,0,
    255,255,255,112,0,7,112,0,7,112,0,7,112,0,7,112,0,7,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,192,225,112,56,28,14,135,195,225,112,56,28,14,135,195,225,
    112,60,248,7,252,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,28,112,14,
    158,131,227,225,112,28,28,7,238,129,59,224,15,240,1,124,0,31,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,224,112,56,199,195,57,62,206,241,57,156,205,
    225,108,14,55,119,184,249,129,143,15,124,124,224,227,3,15,15,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,112,112,28,143,247,224,14,248,0,31,224,3,254,
    192,29,28,199,227,57,56,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,224,28,
    14,231,225,29,248,1,62,192,3,112,0,14,192,1,56,0,7,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,252,207,255,0,15,120,192,3,28,224,1,15,120,192,3,252,223,
    255,1,0,0,0,0,0,0,0,0,0,192,207,207,193,193,193,193,193,193,193,193,193,193,
    193,207,15,0,0,0,0,0,0,6,3,131,193,192,96,48,16,24,12,4,6,3,0,0,
    0,0,0,62,62,56,56,56,56,56,56,56,56,56,56,56,62,62,0,0,0,0,0,0,
    0,0,0,0,192,1,120,0,63,224,24,12,12,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,255,255,3,0,0,192,1,3,12,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,31,252,3,28,255,
    252,231,56,231,249,143,119,0,0,0,0,0,0,0,0,0,0,0,112,0,7,112,0,7,
    112,14,255,241,56,143,115,56,143,243,56,255,113,14,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,240,225,207,35,7,28,112,192,35,254,240,1,0,0,0,0,0,0,
    0,0,0,0,0,14,224,0,14,224,112,142,255,60,207,225,28,206,225,60,143,255,112,14,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,31,248,199,113,252,207,
    255,28,192,67,248,7,63,0,0,0,0,0,0,0,0,0,0,0,159,159,131,227,239,143,
    131,131,131,131,131,131,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,112,142,
    255,60,207,225,28,206,225,60,143,255,112,14,240,8,135,63,240,1,0,0,0,0,0,192,
    1,28,192,1,28,192,57,252,199,243,60,206,225,28,206,225,28,206,225,0,0,0,0,0,
    0,0,0,0,0,199,113,0,199,113,28,199,113,28,7,0,0,0,0,0,192,113,28,192,
    113,28,199,113,28,199,113,156,231,0,0,0,0,0,192,1,28,192,1,28,192,241,156,199,
    61,252,192,15,252,193,57,28,199,225,0,0,0,0,0,0,0,0,0,0,199,113,28,199,
    113,28,199,113,28,7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,156,243,240,255,199,243,28,207,115,28,199,113,28,199,113,28,199,113,28,199,1,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,156,195,127,60,207,
    227,28,206,225,28,206,225,28,14,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,31,248,199,243,28,206,225,28,206,243,248,7,31,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,156,195,127,60,206,227,28,206,227,60,206,127,156,195,
    1,28,192,1,28,0,0,0,0,0,0,0,0,0,0,0,0,0,231,248,207,243,28,206,
    225,28,206,243,248,15,231,0,14,224,0,14,224,0,0,0,0,0,0,0,0,0,224,204,
    159,7,15,14,28,56,112,224,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,124,
    248,231,152,3,252,0,39,156,127,252,0,0,0,0,0,0,0,0,0,0,192,193,193,241,
    255,207,193,193,193,193,193,135,7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    14,231,112,14,231,112,14,231,112,158,199,127,56,7,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,224,224,142,115,28,103,184,195,29,124,224,3,14,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,231,56,231,56,231,25,230,29,
    190,29,62,31,62,15,60,15,28,15,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,224,56,238,240,7,31,112,192,7,127,156,231,56,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,56,184,227,28,199,25,238,224,7,31,248,128,3,28,
    224,192,3,14,0,0,0,0,0,0,0,0,0,0,240,207,63,240,224,193,131,7,15,252,
    243,15,0,0,0,0,0,0,0,0,0,0,0,30,240,1,7,112,0,7,112,128,3,62,
    224,3,56,0,7,112,0,7,112,0,31,224,1,0,0,0,0,128,97,24,134,97,24,134,
    97,24,134,97,24,134,1,0,0,0,0,128,7,248,0,14,192,0,12,192,0,28,192,7,
    124,192,1,12,192,0,12,224,128,15,120,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,192,67,248,31,194,3,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,
};
constexpr GlyphInfo k_heavy_sans_17_glyphs[] = {
    {0, 6, 6},
    {126, 8, 8},
    {294, 9, 9},
    {483, 14, 14},
    {777, 12, 12},
    {1029, 17, 17},
    {1386, 15, 15},
    {1701, 5, 5},
    {1806, 8, 8},
    {1974, 8, 8},
    {2142, 9, 9},
    {2331, 14, 14},
    {2625, 6, 6},
    {2751, 7, 7},
    {2898, 6, 6},
    {3024, 7, 6},
    {3171, 12, 12},
    {3423, 12, 12},
    {3675, 12, 12},
    {3927, 12, 12},
    {4179, 12, 12},
    {4431, 12, 12},
    {4683, 12, 12},
    {4935, 12, 12},
    {5187, 12, 12},
    {5439, 12, 12},
    {5691, 7, 7},
    {5838, 7, 7},
    {5985, 14, 14},
    {6279, 14, 14},
    {6573, 14, 14},
    {6867, 10, 10},
    {7077, 17, 17},
    {7434, 14, 13},
    {7728, 13, 13},
    {8001, 12, 12},
    {8253, 14, 14},
    {8547, 12, 12},
    {8799, 12, 12},
    {9051, 14, 14},
    {9345, 14, 14},
    {9639, 6, 6},
    {9765, 6, 6},
    {9891, 14, 13},
    {10185, 11, 11},
    {10416, 17, 17},
    {10773, 14, 14},
    {11067, 14, 14},
    {11361, 12, 12},
    {11613, 14, 14},
    {11907, 13, 13},
    {12180, 12, 12},
    {12432, 12, 12},
    {12684, 14, 14},
    {12978, 14, 13},
    {13272, 19, 19},
    {13671, 13, 13},
    {13944, 13, 12},
    {14217, 12, 12},
    {14469, 8, 8},
    {14637, 7, 6},
    {14784, 8, 8},
    {14952, 14, 14},
    {15246, 9, 8},
    {15435, 9, 8},
    {15624, 11, 11},
    {15855, 12, 12},
    {16107, 10, 10},
    {16317, 12, 12},
    {16569, 12, 12},
    {16821, 8, 7},
    {16989, 12, 12},
    {17241, 12, 12},
    {17493, 6, 6},
    {17619, 6, 6},
    {17745, 12, 11},
    {17997, 6, 6},
    {18123, 18, 18},
    {18501, 12, 12},
    {18753, 12, 12},
    {19005, 12, 12},
    {19257, 12, 12},
    {19509, 9, 8},
    {19698, 10, 10},
    {19908, 8, 8},
    {20076, 12, 12},
    {20328, 11, 11},
    {20559, 16, 16},
    {20895, 11, 11},
    {21126, 11, 11},
    {21357, 10, 10},
    {21567, 12, 12},
    {21819, 6, 6},
    {21945, 12, 12},
    {22197, 14, 14},
};
constexpr unsigned char k_heavy_sans_20_bits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,128,3,7,14,28,56,112,224,192,129,3,7,0,28,56,112,224,0,0,0,0,0,0,
    0,0,0,0,0,204,49,199,28,115,204,1,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,152,3,56,3,48,6,96,12,252,
    127,248,255,128,49,0,99,0,230,192,255,135,255,15,24,3,48,7,112,6,96,12,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,0,48,0,63,240,63,220,
    12,55,192,13,240,15,248,15,252,3,252,0,123,196,14,255,131,63,0,3,192,0,48,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,124,96,224,15,6,206,48,96,140,3,198,
    24,224,204,0,254,12,192,103,62,0,247,7,48,119,128,49,6,24,99,192,112,7,6,127,
    96,224,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    60,0,254,1,28,2,60,0,112,0,224,1,224,135,227,31,199,121,207,243,143,199,31,15,
    31,60,62,240,255,192,207,3,0,0,0,0,0,0,0,0,0,0,0,0,0,12,195,48,
    12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,7,14,14,28,56,56,112,
    224,192,129,3,7,14,28,120,224,192,1,7,14,0,0,0,0,0,0,192,129,3,14,28,
    120,224,192,129,3,7,14,28,56,112,240,224,192,193,129,3,0,0,0,0,0,0,0,0,
    3,24,200,204,63,120,240,143,204,96,0,3,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,1,128,3,0,7,
    0,14,0,28,192,255,135,255,15,224,0,192,1,128,3,0,7,0,14,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,60,60,60,
    28,28,14,6,0,0,0,0,0,0,0,0,0,0,0,0,0,0,126,126,126,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,60,60,60,
    60,0,0,0,0,0,0,0,0,0,96,96,112,48,48,56,24,24,28,12,12,14,6,6,
    7,3,0,0,0,0,0,0,0,0,0,0,0,240,1,254,193,243,112,56,30,158,135,231,
    225,121,120,30,158,135,231,225,113,56,60,15,254,1,31,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,240,1,127,192,28,0,7,192,1,112,0,28,0,7,192,1,112,
    0,28,0,7,192,1,255,199,255,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,248,1,255,193,248,0,60,0,15,192,3,240,0,30,192,3,120,0,15,224,1,60,0,
    255,195,255,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,248,3,255,65,248,
    0,60,0,15,224,1,63,192,31,128,15,192,3,224,0,60,134,143,255,129,31,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,192,7,240,1,126,192,31,240,7,238,193,
    121,112,30,142,135,227,225,255,249,127,128,7,224,1,120,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,252,7,255,193,1,112,0,28,0,255,192,127,16,62,0,15,128,
    3,224,0,60,132,15,255,129,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,224,7,252,131,135,240,0,28,128,247,224,255,248,60,30,158,135,199,225,113,120,60,15,
    254,1,62,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,254,143,255,3,240,
    0,60,128,7,224,1,60,0,15,192,3,120,0,30,192,3,240,0,28,128,7,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,240,3,255,195,243,112,56,28,14,207,131,
    127,224,31,60,143,135,227,225,121,120,60,15,255,3,63,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,240,1,254,193,113,120,60,30,142,135,231,241,113,124,252,31,188,
    3,224,0,60,132,7,255,128,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,60,60,60,60,0,0,0,60,60,60,60,0,0,0,0,0,0,0,0,0,0,0,
    0,0,60,60,60,60,0,0,0,60,60,60,60,28,12,14,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,48,0,124,0,126,128,31,224,7,192,3,128,31,0,
    248,1,128,31,0,124,0,192,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,255,225,255,3,0,
    0,0,0,255,31,254,63,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,6,0,60,0,240,3,0,63,0,
    240,1,128,7,192,7,240,3,252,0,60,0,24,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,248,224,63,198,3,56,192,3,60,224,1,15,112,128,7,
    0,128,7,120,128,7,120,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,128,31,0,254,7,240,224,128,3,24,28,55,195,248,51,204,57,98,12,99,198,48,102,
    12,35,198,48,195,156,59,140,255,193,113,7,56,64,0,7,7,224,127,0,248,1,0,0,
    0,0,0,0,0,0,0,0,0,0,0,224,3,224,7,224,7,240,7,240,15,112,15,120,
    14,120,30,60,30,60,28,252,63,254,63,30,56,14,120,15,120,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,192,127,224,127,240,120,120,60,60,30,30,15,255,131,
    255,193,227,225,225,241,240,120,120,60,30,254,15,255,1,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,252,128,255,224,65,120,0,28,0,15,128,7,192,3,224,1,
    240,0,112,0,120,0,120,16,248,15,240,3,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,192,127,128,255,3,143,15,30,62,60,120,120,240,240,192,225,129,199,3,
    135,7,15,15,30,30,62,60,62,248,63,240,31,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,252,15,255,195,3,240,0,60,0,15,192,255,240,63,60,0,15,
    192,3,240,0,60,0,255,195,255,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,252,15,255,195,3,240,0,60,0,15,192,255,240,63,60,0,15,192,3,240,0,60,0,
    15,192,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,31,240,63,
    120,32,60,0,28,0,30,0,30,0,30,126,30,126,30,120,28,120,60,120,120,120,240,127,
    192,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,131,135,7,
    15,15,30,30,60,60,120,120,240,240,255,225,255,195,131,135,7,15,15,30,30,60,60,120,
    120,240,240,224,1,0,0,0,0,0,0,0,0,0,0,0,0,0,192,227,241,120,60,30,
    143,199,227,241,120,60,30,15,0,0,0,0,0,0,0,192,227,241,120,60,30,143,199,227,
    241,120,60,30,143,227,121,28,0,0,0,0,0,0,0,0,0,192,131,135,135,7,143,7,
    158,7,188,7,248,7,240,7,224,15,192,63,128,255,0,239,3,158,15,60,62,120,248,240,
    224,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,3,120,0,15,224,
    1,60,128,7,240,0,30,192,3,120,0,15,224,1,60,128,255,241,63,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,124,224,195,7,62,252,240,195,15,63,252,
    248,195,157,63,220,217,195,249,61,156,223,195,241,60,28,207,195,97,60,28,192,195,1,60,
    28,192,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,192,
    131,135,15,15,31,30,126,60,252,120,248,243,112,231,225,220,195,185,135,227,15,199,31,14,
    63,28,126,56,248,112,240,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,254,0,254,3,30,15,30,60,30,240,60,224,121,192,243,128,231,1,207,3,158,
    7,60,30,60,120,60,224,63,128,63,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,192,127,224,255,240,120,120,120,60,60,30,30,15,143,199,195,255,225,63,240,
    0,120,0,60,0,30,0,15,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,254,0,254,3,30,15,30,60,30,240,60,224,121,192,243,128,231,1,207,3,158,
    7,60,30,60,120,60,224,63,128,63,0,240,0,192,3,0,7,0,0,0,0,0,0,0,
    0,0,0,0,192,127,224,127,240,120,120,60,60,30,30,15,143,131,255,192,127,224,121,240,
    120,120,60,60,60,30,30,15,30,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,240,15,254,195,195,112,32,30,0,15,192,63,224,63,240,31,192,7,224,1,120,12,30,
    255,131,63,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,255,255,255,15,30,
    128,7,224,1,120,0,30,128,7,224,1,120,0,30,128,7,224,1,120,0,30,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,60,56,60,56,60,56,60,56,60,56,
    60,56,60,56,60,56,60,56,60,56,60,56,60,60,120,60,248,31,224,7,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,15,120,14,120,30,56,30,60,28,60,
    60,28,60,30,56,30,120,14,112,15,240,15,240,7,224,7,224,7,224,3,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,14,30,156,135,7,231,225,
    225,121,252,120,28,63,14,199,143,195,51,243,240,206,61,184,115,7,238,220,129,31,126,224,
    135,31,248,225,7,124,248,0,31,60,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,30,56,28,60,60,30,120,30,240,15,240,7,224,7,224,3,
    224,7,240,7,120,15,120,30,60,30,30,60,30,120,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,240,192,243,224,121,120,120,30,120,15,252,3,252,1,124,0,30,
    0,15,128,7,192,3,224,1,240,0,120,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,224,255,241,255,0,124,0,62,128,15,224,3,248,0,124,0,31,192,7,240,
    1,248,0,62,0,255,159,255,15,0,0,0,0,0,0,0,0,0,0,0,0,0,192,143,
    31,7,14,28,56,112,224,192,129,3,7,14,28,56,112,224,192,143,31,0,0,0,0,0,
    0,3,7,6,6,14,12,12,28,24,24,56,48,48,112,96,96,0,0,0,0,0,0,0,
    0,224,199,15,28,56,112,224,192,129,3,7,14,28,56,112,224,192,129,227,199,15,0,0,
    0,0,0,0,0,0,0,0,0,56,0,248,0,184,3,56,14,24,48,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,240,255,255,0,0,0,128,3,28,96,0,3,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,252,1,255,1,240,0,60,248,15,255,227,241,56,60,158,143,255,131,247,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,28,0,7,192,1,112,0,156,
    7,255,195,227,241,120,28,28,7,199,193,241,120,60,30,255,195,121,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,129,127,60,224,1,30,224,1,
    30,224,1,60,128,127,240,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,30,
    128,7,224,1,120,112,30,255,199,243,121,120,30,158,135,231,225,121,120,60,31,255,7,231,
    1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,240,
    3,255,193,241,120,56,254,159,255,231,1,120,0,60,8,255,3,63,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,31,63,15,30,255,255,243,224,193,131,7,15,30,60,120,240,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,112,30,255,199,
    243,121,120,30,158,135,231,225,121,120,60,31,255,7,231,1,56,4,15,255,1,31,0,0,
    0,0,0,0,0,0,0,28,0,7,192,1,112,0,156,7,255,195,227,240,120,28,30,135,
    199,225,113,120,28,30,135,199,225,1,0,0,0,0,0,0,0,0,0,0,0,192,225,112,
    0,28,14,135,195,225,112,56,28,14,7,0,0,0,0,0,0,0,192,225,112,0,28,14,
    135,195,225,112,56,28,14,135,227,121,28,0,0,0,0,0,0,0,0,28,0,7,192,1,
    112,0,28,30,199,195,121,112,15,252,1,63,192,31,112,15,156,7,199,195,225,1,0,0,
    0,0,0,0,0,0,0,0,0,192,225,112,56,28,14,135,195,225,112,56,28,14,7,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    156,227,131,255,254,240,124,30,14,143,195,225,112,56,28,14,135,195,225,112,56,28,14,135,
    195,225,112,56,28,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,156,7,255,195,227,240,120,28,30,135,199,225,113,120,28,30,
    135,199,225,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,240,3,255,193,243,120,120,30,158,135,231,225,121,120,60,15,255,1,63,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,156,7,255,195,
    227,241,120,28,28,7,199,193,241,120,60,30,255,195,121,112,0,28,0,7,192,1,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,112,30,255,199,243,121,120,30,158,135,
    231,225,121,120,60,31,255,7,231,1,120,0,30,128,7,224,1,0,0,0,0,0,0,0,
    0,0,0,0,156,243,207,3,15,28,112,192,1,7,28,112,192,1,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,248,193,63,14,226,0,254,192,63,240,7,120,
    134,231,63,248,1,0,0,0,0,0,0,0,0,0,0,0,0,0,240,192,3,15,255,253,
    199,3,15,60,240,192,3,15,60,240,135,31,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,28,30,135,199,225,113,120,28,30,135,199,225,113,120,60,31,
    255,135,231,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,15,222,193,121,60,142,195,113,120,15,238,192,31,240,1,62,192,7,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,14,199,59,
    30,231,121,28,231,115,156,239,113,183,195,207,15,62,63,248,252,224,227,129,143,7,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,30,143,
    227,240,30,252,1,31,224,3,124,192,31,188,199,227,56,56,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,15,206,193,121,60,142,195,115,112,15,238,
    192,31,240,1,62,128,7,112,0,14,248,0,15,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,254,231,127,192,7,62,240,1,15,120,192,3,30,224,127,254,7,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,128,15,240,3,28,0,7,192,1,112,0,30,128,7,
    252,0,63,0,30,128,7,192,1,112,0,28,0,7,192,15,224,3,0,0,0,0,0,0,
    128,193,96,48,24,12,6,131,193,96,48,24,12,6,131,193,96,48,0,0,0,0,0,0,
    0,124,0,63,0,30,128,7,224,1,120,0,30,0,7,192,15,240,3,28,128,7,224,1,
    120,0,30,128,7,252,0,31,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,192,15,195,255,135,225,3,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
};
constexpr GlyphInfo k_heavy_sans_20_glyphs[] = {
    {0, 7, 7},
    {168, 9, 9},
    {384, 10, 10},
    {624, 17, 17},
    {1032, 14, 14},
    {1368, 20, 20},
    {1848, 17, 17},
    {2256, 6, 6},
    {2400, 9, 9},
    {2616, 9, 9},
    {2832, 11, 10},
    {3096, 17, 17},
    {3504, 8, 8},
    {3696, 8, 8},
    {3888, 8, 8},
    {4080, 8, 7},
    {4272, 14, 14},
    {4608, 14, 14},
    {4944, 14, 14},
    {5280, 14, 14},
    {5616, 14, 14},
    {5952, 14, 14},
    {6288, 14, 14},
    {6624, 14, 14},
    {6960, 14, 14},
    {7296, 14, 14},
    {7632, 8, 8},
    {7824, 8, 8},
    {8016, 17, 17},
    {8424, 17, 17},
    {8832, 17, 17},
    {9240, 12, 12},
    {9528, 20, 20},
    {10008, 16, 15},
    {10392, 15, 15},
    {10752, 15, 15},
    {11112, 17, 17},
    {11520, 14, 14},
    {11856, 14, 14},
    {12192, 16, 16},
    {12576, 17, 17},
    {12984, 7, 7},
    {13152, 7, 7},
    {13320, 17, 16},
    {13728, 13, 13},
    {14040, 20, 20},
    {14520, 17, 17},
    {14928, 17, 17},
    {15336, 15, 15},
    {15696, 17, 17},
    {16104, 15, 15},
    {16464, 14, 14},
    {16800, 14, 14},
    {17136, 16, 16},
    {17520, 16, 15},
    {17904, 22, 22},
    {18432, 16, 15},
    {18816, 15, 14},
    {19176, 15, 14},
    {19536, 9, 9},
    {19752, 8, 7},
    {19944, 9, 9},
    {20160, 17, 17},
    {20568, 10, 10},
    {20808, 10, 10},
    {21048, 14, 14},
    {21384, 14, 14},
    {21720, 12, 12},
    {22008, 14, 14},
    {22344, 14, 14},
    {22680, 9, 9},
    {22896, 14, 14},
    {23232, 14, 14},
    {23568, 7, 7},
    {23736, 7, 7},
    {23904, 14, 13},
    {24240, 7, 7},
    {24408, 21, 21},
    {24912, 14, 14},
    {25248, 14, 14},
    {25584, 14, 14},
    {25920, 14, 14},
    {26256, 10, 10},
    {26496, 12, 12},
    {26784, 10, 10},
    {27024, 14, 14},
    {27360, 13, 13},
    {27672, 18, 18},
    {28104, 13, 13},
    {28416, 13, 13},
    {28728, 12, 12},
    {29016, 14, 14},
    {29352, 7, 7},
    {29520, 14, 14},
    {29856, 17, 17},
};

const FontStrike kFontStrikes[] = {
    {0, 10, 13, 10, k_monospace_10_bits, k_monospace_10_glyphs},
    {0, 12, 15, 12, k_monospace_12_bits, k_monospace_12_glyphs},
    {0, 14, 17, 13, k_monospace_14_bits, k_monospace_14_glyphs},
    {0, 17, 21, 16, k_monospace_17_bits, k_monospace_17_glyphs},
    {0, 20, 24, 19, k_monospace_20_bits, k_monospace_20_glyphs},
    {1, 10, 13, 10, k_serif_10_bits, k_serif_10_glyphs},
    {1, 12, 15, 12, k_serif_12_bits, k_serif_12_glyphs},
    {1, 14, 17, 13, k_serif_14_bits, k_serif_14_glyphs},
    {1, 17, 21, 16, k_serif_17_bits, k_serif_17_glyphs},
    {1, 20, 24, 19, k_serif_20_bits, k_serif_20_glyphs},
    {2, 10, 13, 10, k_sans_10_bits, k_sans_10_glyphs},
    {2, 12, 15, 12, k_sans_12_bits, k_sans_12_glyphs},
    {2, 14, 17, 13, k_sans_14_bits, k_sans_14_glyphs},
    {2, 17, 21, 16, k_sans_17_bits, k_sans_17_glyphs},
    {2, 20, 24, 19, k_sans_20_bits, k_sans_20_glyphs},
    {3, 10, 13, 10, k_heavy_sans_10_bits, k_heavy_sans_10_glyphs},
    {3, 12, 15, 12, k_heavy_sans_12_bits, k_heavy_sans_12_glyphs},
    {3, 14, 17, 13, k_heavy_sans_14_bits, k_heavy_sans_14_glyphs},
    {3, 17, 21, 16, k_heavy_sans_17_bits, k_heavy_sans_17_glyphs},
    {3, 20, 24, 19, k_heavy_sans_20_bits, k_heavy_sans_20_glyphs},
};
const std::size_t kFontStrikeCount = 20;

}  // namespace chartforge::detail
