#include "voskit/mask_io.hpp"

#include <png.h>

#include <array>
#include <cstdio>
#include <vector>

namespace voskit {

namespace {

struct FileHandle {
    std::FILE* f = nullptr;
    ~FileHandle() {
        if (f) std::fclose(f);
    }
};

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

// Silence libpng's default stderr chatter; errors surface via longjmp.
void quiet_warning(png_structp, png_const_charp) {}

// Standard VOS palette: bits of the id spread over the colour channels so
// consecutive ids get visually distinct colours (index 0 stays black).
std::array<png_color, 256> make_palette() {
    std::array<png_color, 256> pal{};
    for (int i = 0; i < 256; ++i) {
        int id = i;
        unsigned r = 0, g = 0, b = 0;
        for (int j = 0; j < 8 && id != 0; ++j) {
            r |= static_cast<unsigned>((id >> 0) & 1) << (7 - j);
            g |= static_cast<unsigned>((id >> 1) & 1) << (7 - j);
            b |= static_cast<unsigned>((id >> 2) & 1) << (7 - j);
            id >>= 3;
        }
        pal[i] = {static_cast<png_byte>(r), static_cast<png_byte>(g),
                  static_cast<png_byte>(b)};
    }
    return pal;
}

}  // namespace

LabelMap read_mask_file(const std::filesystem::path& path, int max_side) {
    FileHandle file;
    file.f = std::fopen(path.c_str(), "rb");
    if (!file.f) throw MaskIoError(path, "cannot open for reading");

    unsigned char sig[8] = {};
    if (std::fread(sig, 1, 8, file.f) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
        throw MaskIoError(path, "not a PNG file");
    }

    PngReader r;
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                   quiet_warning);
    if (!r.png) throw MaskIoError(path, "libpng init failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw MaskIoError(path, "libpng init failed");

    LabelMap map;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(r.png))) {
        throw MaskIoError(path, "corrupt PNG data");
    }

    png_init_io(r.png, file.f);
    png_set_sig_bytes(r.png, 8);
    png_read_info(r.png, r.info);

    const png_uint_32 w = png_get_image_width(r.png, r.info);
    const png_uint_32 h = png_get_image_height(r.png, r.info);
    const int bit_depth = png_get_bit_depth(r.png, r.info);
    const int color_type = png_get_color_type(r.png, r.info);

    if (bit_depth != 8) throw MaskIoError(path, "unsupported bit depth");
    if (color_type != PNG_COLOR_TYPE_PALETTE && color_type != PNG_COLOR_TYPE_GRAY) {
        throw MaskIoError(path, "not an indexed or grayscale mask");
    }
    if (w < 1 || h < 1) throw MaskIoError(path, "empty image");
    if (w > static_cast<png_uint_32>(max_side) ||
        h > static_cast<png_uint_32>(max_side)) {
        throw MaskIoError(path, "dimensions exceed configured maximum of " +
                                    std::to_string(max_side));
    }

    png_set_interlace_handling(r.png);
    png_read_update_info(r.png, r.info);
    if (png_get_rowbytes(r.png, r.info) != w) {
        throw MaskIoError(path, "unexpected row layout");
    }

    map = LabelMap(static_cast<int>(w), static_cast<int>(h));
    rows.resize(h);
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = map.row(static_cast<int>(y));
    png_read_image(r.png, rows.data());
    png_read_end(r.png, nullptr);
    return map;
}

void write_mask_file(const LabelMap& map, const std::filesystem::path& path) {
    if (map.width < 1 || map.height < 1 ||
        map.labels.size() != static_cast<std::size_t>(map.width) * map.height) {
        throw MaskIoError(path, "label map is malformed");
    }

    FileHandle file;
    file.f = std::fopen(path.c_str(), "wb");
    if (!file.f) throw MaskIoError(path, "cannot open for writing");

    PngWriter w;
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                    quiet_warning);
    if (!w.png) throw MaskIoError(path, "libpng init failed");
    w.info = png_create_info_struct(w.png);
    if (!w.info) throw MaskIoError(path, "libpng init failed");

    static const std::array<png_color, 256> palette = make_palette();
    std::vector<png_bytep> rows(map.height);
    if (setjmp(png_jmpbuf(w.png))) {
        throw MaskIoError(path, "PNG write failed");
    }

    png_init_io(w.png, file.f);
    png_set_IHDR(w.png, w.info, static_cast<png_uint_32>(map.width),
                 static_cast<png_uint_32>(map.height), 8, PNG_COLOR_TYPE_PALETTE,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_set_PLTE(w.png, w.info, palette.data(), 256);
    png_write_info(w.png, w.info);

    for (int y = 0; y < map.height; ++y) {
        rows[y] = const_cast<png_bytep>(map.row(y));
    }
    png_write_image(w.png, rows.data());
    png_write_end(w.png, nullptr);
}

}  // namespace voskit
