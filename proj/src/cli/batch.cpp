#include <ostream>

#include "apc/cli/console.hpp"
#include "apc/data/dataset.hpp"
#include "apc/errors.hpp"
#include "apc/viz/chart.hpp"

namespace apc::cli {

std::filesystem::path export_object(const Session& session, const OutputItem& ref, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    if (ref.tag == OutputItem::Tag::ChartRef) {
        auto path = dir / (ref.text + ".svg");
        data::write_file(path.string(), viz::render_svg(*session.chart(ref.text)));
        return path;
    }
    ReportPtr r = session.report(ref.text);
    auto path = dir / (ref.text + (r->kind == report::ReportKind::Html ? ".html" : ".txt"));
    data::write_file(path.string(), r->body);
    return path;
}

ExitStatus run_batch(Session& session, std::string_view source, std::ostream& out, std::ostream& err,
                     const ConsoleConfig& config) {
    ExitStatus status = kExitOk;
    bool export_failed = false;
    auto save = [&](const OutputItem& ref) {
        if (!config.output_dir || export_failed) return;
        try {
            err << "wrote " << export_object(session, ref, *config.output_dir).string() << '\n';
        } catch (const Error& e) {
            err << e.display() << '\n';
            export_failed = true;
        } catch (const std::filesystem::filesystem_error& e) {
            err << "IoError: " << e.what() << '\n';
            export_failed = true;
        }
    };
    session.execute(
        source,
        [&](const OutputItem& item) {
            switch (item.tag) {
            case OutputItem::Tag::Text: out << item.text << '\n'; break;
            case OutputItem::Tag::Error:
                err << item.text << '\n';
                status = kExitEvalError;
                break;
            default: save(item);
            }
        },
        true);
    out.flush();
    return export_failed ? kExitUsage : status;
}

}  // namespace apc::cli
