#include "news/types.hpp"

namespace news {

std::string to_string(Stage s) {
    switch (s) {
        case Stage::s1_editions: return "S1_editions";
        case Stage::s2_months: return "S2_months";
        case Stage::s3_iso: return "S3_iso";
        case Stage::s4_domains: return "S4_domains";
        case Stage::s5_backfill: return "S5_backfill";
    }
    return "S1_editions";
}

std::optional<Stage> stage_from_string(std::string_view s) {
    if (s == "S1_editions") return Stage::s1_editions;
    if (s == "S2_months") return Stage::s2_months;
    if (s == "S3_iso") return Stage::s3_iso;
    if (s == "S4_domains") return Stage::s4_domains;
    if (s == "S5_backfill") return Stage::s5_backfill;
    return std::nullopt;
}

int stage_index(Stage s) {
    return static_cast<int>(s);
}

std::string to_string(ExtractionMethod m) {
    switch (m) {
        case ExtractionMethod::listing: return "listing";
        case ExtractionMethod::direct_fetch: return "direct_fetch";
        case ExtractionMethod::backfill: return "backfill";
        case ExtractionMethod::manual: return "manual";
    }
    return "listing";
}

std::optional<ExtractionMethod> extraction_method_from_string(std::string_view s) {
    if (s == "listing") return ExtractionMethod::listing;
    if (s == "direct_fetch") return ExtractionMethod::direct_fetch;
    if (s == "backfill") return ExtractionMethod::backfill;
    if (s == "manual") return ExtractionMethod::manual;
    return std::nullopt;
}

std::string to_string(DatasetOrigin o) {
    switch (o) {
        case DatasetOrigin::aggregator: return "aggregator";
        case DatasetOrigin::licensed_a: return "licensed_a";
        case DatasetOrigin::licensed_b: return "licensed_b";
        case DatasetOrigin::imported: return "import";
    }
    return "aggregator";
}

std::optional<DatasetOrigin> dataset_origin_from_string(std::string_view s) {
    if (s == "aggregator") return DatasetOrigin::aggregator;
    if (s == "licensed_a") return DatasetOrigin::licensed_a;
    if (s == "licensed_b") return DatasetOrigin::licensed_b;
    if (s == "import") return DatasetOrigin::imported;
    return std::nullopt;
}

} // namespace news
