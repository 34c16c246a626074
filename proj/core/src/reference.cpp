#include "wenum/reference.hpp"

namespace wenum::reference {

namespace {

ReferenceVector make(std::string code, int n, int t, std::vector<std::string> entries) {
    ReferenceVector v;
    v.code = std::move(code);
    v.n = n;
    v.t = t;
    v.entries = std::move(entries);
    return v;
}

} // namespace

const ReferenceVector& golay24_order19() {
    static const ReferenceVector v = make("golay24", 24, 19, {
        "-1167936*p + 483776",
        "1202240*p - 497984",
        "1202240*p - 497984",
        "-1180608*p + 489024",
        "1202240*p - 497984",
        "-1180608*p + 489024",
        "-1180608*p + 489024",
        "1023936*p - 424128",
        "1202240*p - 497984",
        "-1180608*p + 489024",
        "-1180608*p + 489024",
        "1023936*p - 424128",
        "-1180608*p + 489024",
        "1023936*p - 424128",
        "1023936*p - 424128",
        "-750144*p + 310720",
        "1202240*p - 497984",
        "-1180608*p + 489024",
        "-1180608*p + 489024",
        "1023936*p - 424128",
        "-1180608*p + 489024",
        "1023936*p - 424128",
        "1023936*p - 424128",
        "-750144*p + 310720",
        "-1180608*p + 489024",
        "1023936*p - 424128",
        "1023936*p - 424128",
        "-750144*p + 310720",
        "1023936*p - 424128",
        "-750144*p + 310720",
        "-750144*p + 310720",
        "7081024*p - 2933056",
    });
    return v;
}

const ReferenceVector& qr48_order43() {
    static const ReferenceVector v = make("qr48", 48, 43, {
        "-1801295637184512*p + 746121082765312",
        "1799773991403520*p - 745490796445696",
        "1799773991403520*p - 745490796445696",
        "-1787591301070848*p + 740444560883712",
        "1799773991403520*p - 745490796445696",
        "-1787591301070848*p + 740444560883712",
        "-1787591301070848*p + 740444560883712",
        "1749670572392448*p - 724737280770048",
        "1799773991403520*p - 745490796445696",
        "-1787591301070848*p + 740444560883712",
        "-1787591301070848*p + 740444560883712",
        "1749670572392448*p - 724737280770048",
        "-1787591301070848*p + 740444560883712",
        "1749670572392448*p - 724737280770048",
        "1749670572392448*p - 724737280770048",
        "-1666630947373056*p + 690341141872640",
        "1799773991403520*p - 745490796445696",
        "-1787591301070848*p + 740444560883712",
        "-1787591301070848*p + 740444560883712",
        "1749670572392448*p - 724737280770048",
        "-1787591301070848*p + 740444560883712",
        "1749670572392448*p - 724737280770048",
        "1749670572392448*p - 724737280770048",
        "-1666630947373056*p + 690341141872640",
        "-1787591301070848*p + 740444560883712",
        "1749670572392448*p - 724737280770048",
        "1749670572392448*p - 724737280770048",
        "-1666630947373056*p + 690341141872640",
        "1749670572392448*p - 724737280770048",
        "-1666630947373056*p + 690341141872640",
        "-1666630947373056*p + 690341141872640",
        "11704454583615488*p - 4848143828713472",
    });
    return v;
}

const ReferenceVector& length72_order67() {
    static const ReferenceVector v = make("", 72, 67, {
        "-2766052144192871265730560*p + 1145736312355867181711360",
        "2764814255733869297795072*p - 1145223562167443435552768",
        "2764814255733869297795072*p - 1145223562167443435552768",
        "-2759776102730699957600256*p + 1143136690864219955920896",
        "2764814255733869297795072*p - 1145223562167443435552768",
        "-2759776102730699957600256*p + 1143136690864219955920896",
        "-2759776102730699957600256*p + 1143136690864219955920896",
        "2745563299524396139413504*p - 1137249555016829104029696",
        "2764814255733869297795072*p - 1145223562167443435552768",
        "-2759776102730699957600256*p + 1143136690864219955920896",
        "-2759776102730699957600256*p + 1143136690864219955920896",
        "2745563299524396139413504*p - 1137249555016829104029696",
        "-2759776102730699957600256*p + 1143136690864219955920896",
        "2745563299524396139413504*p - 1137249555016829104029696",
        "2745563299524396139413504*p - 1137249555016829104029696",
        "-2713300183161139309314048*p + 1123885734654746797539328",
        "2764814255733869297795072*p - 1145223562167443435552768",
        "-2759776102730699957600256*p + 1143136690864219955920896",
        "-2759776102730699957600256*p + 1143136690864219955920896",
        "2745563299524396139413504*p - 1137249555016829104029696",
        "-2759776102730699957600256*p + 1143136690864219955920896",
        "2745563299524396139413504*p - 1137249555016829104029696",
        "2745563299524396139413504*p - 1137249555016829104029696",
        "-2713300183161139309314048*p + 1123885734654746797539328",
        "-2759776102730699957600256*p + 1143136690864219955920896",
        "2745563299524396139413504*p - 1137249555016829104029696",
        "2745563299524396139413504*p - 1137249555016829104029696",
        "-2713300183161139309314048*p + 1123885734654746797539328",
        "2745563299524396139413504*p - 1137249555016829104029696",
        "-2713300183161139309314048*p + 1123885734654746797539328",
        "-2713300183161139309314048*p + 1123885734654746797539328",
        "18297763639587213294960640*p - 7579181860614308846632960",
    });
    return v;
}

const std::vector<std::string>& candidates8() {
    static const std::vector<std::string> v = {
        "1,0,0,0,14,0,0,0,1", "1,0,1,0,12,0,1,0,1", "1,0,2,0,10,0,2,0,1",
        "1,0,3,0,8,0,3,0,1",  "1,0,4,0,6,0,4,0,1",  "1,0,5,0,4,0,5,0,1",
        "1,0,6,0,2,0,6,0,1",  "1,0,7,0,0,0,7,0,1",
    };
    return v;
}

const std::vector<std::string>& candidate8_y_values() {
    static const std::vector<std::string> v = {"0",   "3/4", "3/2", "9/4",
                                               "3",   "15/4", "9/2", "21/4"};
    return v;
}

const std::vector<std::string>& candidate8_survivors() {
    static const std::vector<std::string> v = {"1,0,0,0,14,0,0,0,1", "1,0,4,0,6,0,4,0,1"};
    return v;
}

} // namespace wenum::reference
